#include "ncqh/repchecks.hpp"

#include "ncqh/checks.hpp"
#include "ncqh/derivation.hpp"
#include "ncqh/forms.hpp"

namespace ncqh {

namespace {

// Per-arrow component matrices of a tangent as one flat coordinate vector,
// arrow-major then row-major (the deterministic basis order).
Eigen::Matrix<Rat, Eigen::Dynamic, 1> flatten(const MatrixPoint& pt, const Tangent& t) {
  Eigen::Matrix<Rat, Eigen::Dynamic, 1> v(tangentDim(pt));
  int k = 0;
  for (int c = 0; c < pt.alg->arrowCount(); ++c)
    for (int i = 0; i < t[c].rows(); ++i)
      for (int j = 0; j < t[c].cols(); ++j) v(k++) = t[c](i, j);
  return v;
}

}  // namespace

CheckResult glActionCheck(const QPStructure& s, const MatrixPoint& pt) {
  const Algebra& alg = *s.alg;
  for (int p : alg.vertices()) {
    DDeriv ep = canonicalE(alg, p);
    int n = pt.alpha.at(p);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Tangent viaE = entryField(pt, ep, i, j);
        // conjugation field of xi = f_{ji}: X(c) -> X(c) xi [h=p] - xi X(c) [t=p]
        RMat xi = RMat::Zero(n, n);
        xi(j, i) = Rat(1);
        Tangent conj = zeroTangent(pt);
        for (int c = 0; c < alg.arrowCount(); ++c) {
          if (alg.dquiver().head(c) == p) conj[c] += pt.X[c] * xi;
          if (alg.dquiver().tail(c) == p) conj[c] -= xi * pt.X[c];
        }
        for (int c = 0; c < alg.arrowCount(); ++c)
          if (viaE[c] != conj[c])
            return CheckResult::fail("gl-action", "E_" + std::to_string(p) + " entry (" +
                                                      std::to_string(i) + "," + std::to_string(j) +
                                                      ") mismatches f_ji", "numeric");
      }
  }
  CheckResult r = CheckResult::ok("gl-action", "numeric");
  return r;
}

CheckResult momentCheck(const QPStructure& s, const QBStructure& qb, const MatrixPoint& pt) {
  const Algebra& alg = *s.alg;
  auto basis = tangentBasis(pt);
  const int dim = static_cast<int>(basis.size());
  // two-form and bivector matrices on the coordinate bases
  RMat W(dim, dim);
  for (int A = 0; A < dim; ++A)
    for (int B = 0; B < dim; ++B) W(A, B) = evalFormTrace(pt, qb.omega, {basis[A], basis[B]});
  // bivector through the generator double brackets
  std::vector<std::vector<Tensor>> br(alg.arrowCount(),
                                      std::vector<Tensor>(alg.arrowCount(), Tensor(&alg, 2)));
  for (int c = 0; c < alg.arrowCount(); ++c)
    for (int b = 0; b < alg.arrowCount(); ++b) br[c][b] = s.bracket()(alg.arrow(c), alg.arrow(b));
  RMat Pi(dim, dim);
  {
    int A = 0;
    for (int c = 0; c < alg.arrowCount(); ++c) {
      int rc = pt.alpha.at(alg.dquiver().tail(c)), cc = pt.alpha.at(alg.dquiver().head(c));
      for (int i = 0; i < rc; ++i)
        for (int j = 0; j < cc; ++j, ++A) {
          int B = 0;
          for (int b = 0; b < alg.arrowCount(); ++b) {
            int rb = pt.alpha.at(alg.dquiver().tail(b)), cb = pt.alpha.at(alg.dquiver().head(b));
            for (int u = 0; u < rb; ++u)
              for (int v = 0; v < cb; ++v, ++B) Pi(A, B) = entryBracket(pt, br[c][b], i, j, u, v);
          }
        }
    }
  }
  for (int A = 0; A < dim; ++A) {
    // LHS: tr(P)(tr(omega)(delta_A)) with covector components W(A, -)
    Eigen::Matrix<Rat, Eigen::Dynamic, 1> lhs(dim);
    for (int B = 0; B < dim; ++B) {
      Rat acc(0);
      for (int C = 0; C < dim; ++C) acc += W(A, C) * Pi(C, B);
      lhs(B) = acc;
    }
    // RHS: delta_A - 1/4 sum (Theta - ThetaBar)_{lk} field of (E_p)_{kl}
    Eigen::Matrix<Rat, Eigen::Dynamic, 1> rhs = flatten(pt, basis[A]);
    for (const auto& [p, comp] : qb.phi) {
      RMat phiVal = evalElement(pt, comp.elem, p, p);
      RMat phiInv = evalElement(pt, comp.inv, p, p);
      RMat dphi = dualDerivativeElement(pt, comp.elem, p, p, basis[A]);
      RMat theta = phiInv * dphi;
      RMat thetaBar = dphi * phiInv;
      RMat diff = theta - thetaBar;
      DDeriv ep = canonicalE(alg, p);
      int n = pt.alpha.at(p);
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          if (diff(l, k).isZero()) continue;
          Tangent f = entryField(pt, ep, k, l);
          rhs -= Rat(1, 4) * diff(l, k) * flatten(pt, f);
        }
    }
    if (lhs != rhs)
      return CheckResult::fail("moment-compat", "tangent basis index " + std::to_string(A),
                               "numeric");
  }
  return CheckResult::ok("moment-compat", "numeric");
}

RankReport rankNondegeneracyP3(const QPStructure& s, const MatrixPoint& pt) {
  const Algebra& alg = *s.alg;
  const int dim = tangentDim(pt);
  std::vector<Eigen::Matrix<Rat, Eigen::Dynamic, 1>> cols;
  // Hamiltonian fields of the coordinate functions: rows of the bivector.
  std::vector<std::vector<Tensor>> br(alg.arrowCount(),
                                      std::vector<Tensor>(alg.arrowCount(), Tensor(&alg, 2)));
  for (int c = 0; c < alg.arrowCount(); ++c)
    for (int b = 0; b < alg.arrowCount(); ++b) br[c][b] = s.bracket()(alg.arrow(c), alg.arrow(b));
  for (int c = 0; c < alg.arrowCount(); ++c) {
    int rc = pt.alpha.at(alg.dquiver().tail(c)), cc = pt.alpha.at(alg.dquiver().head(c));
    for (int i = 0; i < rc; ++i)
      for (int j = 0; j < cc; ++j) {
        Eigen::Matrix<Rat, Eigen::Dynamic, 1> col(dim);
        int B = 0;
        for (int b = 0; b < alg.arrowCount(); ++b) {
          int rb = pt.alpha.at(alg.dquiver().tail(b)), cb = pt.alpha.at(alg.dquiver().head(b));
          for (int u = 0; u < rb; ++u)
            for (int v = 0; v < cb; ++v, ++B) col(B) = entryBracket(pt, br[c][b], i, j, u, v);
        }
        cols.push_back(col);
      }
  }
  // gl fields
  for (int p : alg.vertices()) {
    DDeriv ep = canonicalE(alg, p);
    int n = pt.alpha.at(p);
    for (int k = 0; k < n; ++k)
      for (int l = 0; l < n; ++l) cols.push_back(flatten(pt, entryField(pt, ep, k, l)));
  }
  RMat M(dim, static_cast<int>(cols.size()));
  for (int j = 0; j < M.cols(); ++j) M.col(j) = cols[j];
  Eigen::FullPivLU<RMat> lu(M);
  RankReport r;
  r.expected = dim;
  r.rank = static_cast<int>(lu.rank());
  r.fullRank = r.rank == dim;
  return r;
}

RankReport rankNondegeneracyB3(const QPStructure& s, const QBStructure& qb, const MatrixPoint& pt) {
  const int dim = tangentDim(pt);
  auto basis = tangentBasis(pt);
  std::vector<Eigen::Matrix<Rat, Eigen::Dynamic, 1>> cols;
  // omega_x(delta): covectors over the tangent basis
  for (int A = 0; A < dim; ++A) {
    Eigen::Matrix<Rat, Eigen::Dynamic, 1> col(dim);
    for (int B = 0; B < dim; ++B) col(B) = evalFormTrace(pt, qb.omega, {basis[A], basis[B]});
    cols.push_back(col);
  }
  // d(X(Phi_p)_{ij}): gradient covectors
  for (const auto& [p, comp] : qb.phi) {
    int n = pt.alpha.at(p);
    std::vector<RMat> grads;
    for (int B = 0; B < dim; ++B) grads.push_back(dualDerivativeElement(pt, comp.elem, p, p, basis[B]));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Eigen::Matrix<Rat, Eigen::Dynamic, 1> col(dim);
        for (int B = 0; B < dim; ++B) col(B) = grads[B](i, j);
        cols.push_back(col);
      }
  }
  RMat M(dim, static_cast<int>(cols.size()));
  for (int j = 0; j < M.cols(); ++j) M.col(j) = cols[j];
  Eigen::FullPivLU<RMat> lu(M);
  RankReport r;
  r.expected = dim;
  r.rank = static_cast<int>(lu.rank());
  r.fullRank = r.rank == dim;
  return r;
}

namespace {

// {a_{ij}, x_{kv}} = {{a,x}}'_{kj} {{a,x}}''_{iv} for evaluated legs.
Rat entryPair(const MatrixPoint& pt, const Tensor& beta, int i, int j, int k, int v) {
  return entryBracket(pt, beta, i, j, k, v);
}

}  // namespace

CheckResult numericJacobi(const QPStructure& s, const MatrixPoint& pt, int ca, int cb, int cc) {
  const Algebra& alg = *s.alg;
  Element a = alg.arrow(ca), b = alg.arrow(cb), c = alg.arrow(cc);
  const PBracket& pb = s.bracket();
  // {f,{g,h}} expanded through double brackets: for f = a_{ij}, g = b_{uv},
  // h = c_{kl}: {g,h} = sum x'_{kv} x''_{ul}, then the Leibniz rule.
  auto jacTerm = [&](const Element& A, int i, int j, const Element& B, int u, int v,
                     const Element& C, int k, int l) {
    Tensor bc = pb(B, C);
    Rat acc(0);
    for (const auto& [legs, coef] : bc.terms()) {
      Element x1(&alg), x2(&alg);
      x1.addTerm(legs[0], Rat(1));
      x2.addTerm(legs[1], Rat(1));
      int p1 = alg.tailOf(legs[0]), q1 = alg.headOf(legs[0]);
      int p2 = alg.tailOf(legs[1]), q2 = alg.headOf(legs[1]);
      RMat X1 = evalElement(pt, x1, p1, q1);
      RMat X2 = evalElement(pt, x2, p2, q2);
      // {A_ij, x1_{kv}} X2_{ul} + X1_{kv} {A_ij, x2_{ul}}
      acc += coef * (entryPair(pt, pb(A, x1), i, j, k, v) * X2(u, l) +
                     X1(k, v) * entryPair(pt, pb(A, x2), i, j, u, l));
    }
    return acc;
  };
  // the 1/12 E^3 shadow through the same dictionary on the triple tensor
  Tensor e3 = tripleBracketE3(alg, a, b, c);
  int na = pt.alpha.at(alg.dquiver().tail(ca)), ma = pt.alpha.at(alg.dquiver().head(ca));
  int nb = pt.alpha.at(alg.dquiver().tail(cb)), mb = pt.alpha.at(alg.dquiver().head(cb));
  int nc = pt.alpha.at(alg.dquiver().tail(cc)), mc = pt.alpha.at(alg.dquiver().head(cc));
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < ma; ++j)
      for (int u = 0; u < nb; ++u)
        for (int v = 0; v < mb; ++v)
          for (int k = 0; k < nc; ++k)
            for (int l = 0; l < mc; ++l) {
              Rat jac = jacTerm(a, i, j, b, u, v, c, k, l) + jacTerm(b, u, v, c, k, l, a, i, j) +
                        jacTerm(c, k, l, a, i, j, b, u, v);
              Rat rhs(0);
              for (const auto& [legs, coef] : e3.terms()) {
                Element l1(&alg), l2(&alg), l3(&alg);
                l1.addTerm(legs[0], Rat(1));
                l2.addTerm(legs[1], Rat(1));
                l3.addTerm(legs[2], Rat(1));
                RMat M1 = evalElement(pt, l1, alg.tailOf(legs[0]), alg.headOf(legs[0]));
                RMat M2 = evalElement(pt, l2, alg.tailOf(legs[1]), alg.headOf(legs[1]));
                RMat M3 = evalElement(pt, l3, alg.tailOf(legs[2]), alg.headOf(legs[2]));
                rhs += coef * M1(k, j) * M2(i, v) * M3(u, l);
              }
              if (jac != Rat(1, 12) * rhs)
                return CheckResult::fail(
                    "quasi-jacobi",
                    "entries ((" + std::to_string(i) + "," + std::to_string(j) + "),(" +
                        std::to_string(u) + "," + std::to_string(v) + "),(" + std::to_string(k) +
                        "," + std::to_string(l) + "))",
                    "numeric");
            }
  return CheckResult::ok("quasi-jacobi", "numeric");
}

CheckResult lemma336Check(const QBStructure& qb, const DDeriv& p, const MatrixPoint& pt) {
  const Algebra& alg = *qb.alg;
  // i_{p_{ij}}(tr omega) = (iota_p omega)_{ij} as 1-forms on the tangent basis
  auto basis = tangentBasis(pt);
  Element ip = iotaForm(p, qb.omega);
  // block sizes of the derivation: rows from the second legs, cols from the
  // first legs of its coordinates; probe all vertex pairs that occur.
  for (int pv : alg.vertices())
    for (int qv : alg.vertices()) {
      // matrix-valued: i ranges over alpha(pv) (second-leg tails),
      // j over alpha(qv) (first-leg heads).
      Element comp = ip.component(pv, qv);
      bool relevant = !comp.isZero();
      for (int c = 0; c < alg.arrowCount() && !relevant; ++c)
        for (const auto& [legs, coef] : p.coord(c).terms())
          if (alg.tailOf(legs[1]) == pv && alg.headOf(legs[0]) == qv) relevant = true;
      if (!relevant) continue;
      for (int i = 0; i < pt.alpha.at(pv); ++i)
        for (int j = 0; j < pt.alpha.at(qv); ++j) {
          Tangent f = entryField(pt, p, i, j);
          for (const auto& t : basis) {
            Rat lhs = evalFormTrace(pt, qb.omega, {f, t});
            RMat rhsM = RMat::Zero(pt.alpha.at(pv), pt.alpha.at(qv));
            for (const auto& [w, coef] : comp.terms())
              rhsM += coef * evalFormWordMultilinear(pt, w, {t});
            if (lhs != rhsM(i, j))
              return CheckResult::fail("lemma336", "entry (" + std::to_string(i) + "," +
                                                       std::to_string(j) + ")",
                                       "numeric");
          }
        }
    }
  return CheckResult::ok("lemma336", "numeric");
}

}  // namespace ncqh
