#include "ncqh/repspace.hpp"

#include <algorithm>
#include <numeric>

namespace ncqh {

void DimensionVector::validate(const Algebra& alg) const {
  for (int p : alg.vertices()) {
    auto it = alpha.find(p);
    if (it == alpha.end()) throw AlgebraError("dimension vector misses vertex " + std::to_string(p));
    if (it->second < 1) throw AlgebraError("dimension vector entries must be >= 1");
  }
}

namespace {

RMat identity(int n) { return RMat::Identity(n, n); }

std::optional<RMat> tryInverse(const RMat& m) {
  Eigen::FullPivLU<RMat> lu(m);
  if (lu.rank() != m.rows()) return std::nullopt;
  return lu.inverse();
}

}  // namespace

MatrixPoint makePoint(const Algebra& alg, const DimensionVector& alpha, std::vector<RMat> X) {
  alpha.validate(alg);
  MatrixPoint pt;
  pt.alg = &alg;
  pt.alpha = alpha;
  pt.X = std::move(X);
  pt.Ginv.resize(alg.arrowCount());
  for (int c = 0; c < alg.arrowCount(); ++c) {
    int t = alg.dquiver().tail(c), h = alg.dquiver().head(c);
    if (pt.X[c].rows() != alpha.at(t) || pt.X[c].cols() != alpha.at(h))
      throw AlgebraError("matrix shape mismatch on arrow " + alg.dquiver().name(c));
  }
  for (int c = 0; c < alg.arrowCount(); ++c) {
    int t = alg.dquiver().tail(c);
    RMat m = identity(alpha.at(t)) + pt.X[c] * pt.X[DoubleQuiver::reverse(c)];
    auto inv = tryInverse(m);
    if (!inv) throw AlgebraError("I + X(c)X(c*) is singular at arrow " + alg.dquiver().name(c));
    pt.Ginv[c] = *inv;
  }
  return pt;
}

MatrixPoint randomPoint(const Algebra& alg, const DimensionVector& alpha, std::uint64_t seed) {
  alpha.validate(alg);
  Rng rng(seed);
  for (int attempt = 0; attempt < 200; ++attempt) {
    std::vector<RMat> X(alg.arrowCount());
    for (int c = 0; c < alg.arrowCount(); ++c) {
      int t = alg.dquiver().tail(c), h = alg.dquiver().head(c);
      RMat m(alpha.at(t), alpha.at(h));
      for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) m(i, j) = rng.smallRat();
      X[c] = m;
    }
    try {
      MatrixPoint pt = makePoint(alg, alpha, std::move(X));
      pt.retries = attempt;
      return pt;
    } catch (const AlgebraError&) {
      continue;  // singular draw, retry
    }
  }
  throw AlgebraError("exhausted retries drawing an invertible point");
}

RMat evalWord(const MatrixPoint& pt, const Word& w) {
  const Algebra& alg = *pt.alg;
  RMat m = identity(pt.alpha.at(alg.tailOf(w)));
  for (Sym s : w.syms) {
    switch (s.kind) {
      case SymKind::Idem: break;
      case SymKind::Arrow: m = m * pt.X[s.idx]; break;
      case SymKind::Inv: m = m * pt.Ginv[s.idx]; break;
      default: throw AlgebraError("evaluation of a non-algebra word");
    }
  }
  return m;
}

RMat evalElement(const MatrixPoint& pt, const Element& x, int p, int q) {
  RMat m = RMat::Zero(pt.alpha.at(p), pt.alpha.at(q));
  const Algebra& alg = *pt.alg;
  for (const auto& [w, c] : x.terms())
    if (alg.tailOf(w) == p && alg.headOf(w) == q) m += c * evalWord(pt, w);
  return m;
}

Rat evalTrace(const MatrixPoint& pt, const Element& x) {
  Rat t(0);
  const Algebra& alg = *pt.alg;
  for (const auto& [w, c] : x.terms()) {
    if (alg.tailOf(w) != alg.headOf(w)) throw AlgebraError("trace of a non-closed word");
    t += c * evalWord(pt, w).trace();
  }
  return t;
}

RMat evalFormWordMultilinear(const MatrixPoint& pt, const Word& w, const std::vector<Tangent>& ts) {
  const Algebra& alg = *pt.alg;
  RMat m = identity(pt.alpha.at(alg.tailOf(w)));
  std::size_t slot = 0;
  for (Sym s : w.syms) {
    switch (s.kind) {
      case SymKind::Idem: break;
      case SymKind::Arrow: m = m * pt.X[s.idx]; break;
      case SymKind::Inv: m = m * pt.Ginv[s.idx]; break;
      case SymKind::Diff:
        if (slot >= ts.size()) throw AlgebraError("form degree exceeds tangent count");
        m = m * ts[slot++][s.idx];
        break;
      default: throw AlgebraError("unexpected symbol in form evaluation");
    }
  }
  if (slot != ts.size()) throw AlgebraError("form degree does not match tangent count");
  return m;
}

namespace {

template <typename SlotEval>
Rat traceAlternating(const MatrixPoint& pt, const Element& x, std::size_t arity, SlotEval&& evalOne) {
  const Algebra& alg = *pt.alg;
  std::vector<int> perm(arity);
  Rat total(0);
  for (const auto& [w, c] : x.terms()) {
    if (alg.tailOf(w) != alg.headOf(w)) continue;  // vanishes in the quotient
    std::iota(perm.begin(), perm.end(), 0);
    do {
      int inversions = 0;
      for (std::size_t i = 0; i < arity; ++i)
        for (std::size_t j = i + 1; j < arity; ++j)
          if (perm[i] > perm[j]) ++inversions;
      Rat sgn((inversions & 1) ? -1 : 1);
      total += c * sgn * evalOne(w, perm).trace();
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return total;
}

}  // namespace

Rat evalFormTrace(const MatrixPoint& pt, const Element& form, const std::vector<Tangent>& ts) {
  return traceAlternating(pt, form, ts.size(), [&](const Word& w, const std::vector<int>& perm) {
    std::vector<Tangent> arranged;
    arranged.reserve(perm.size());
    for (int k : perm) arranged.push_back(ts[k]);
    return evalFormWordMultilinear(pt, w, arranged);
  });
}

Rat evalPolyTrace(const MatrixPoint& pt, const Element& poly, const std::vector<Tangent>& cots) {
  const Algebra& alg = *pt.alg;
  return traceAlternating(pt, poly, cots.size(), [&](const Word& w, const std::vector<int>& perm) {
    RMat m = identity(pt.alpha.at(alg.tailOf(w)));
    std::size_t slot = 0;
    for (Sym s : w.syms) {
      switch (s.kind) {
        case SymKind::Idem: break;
        case SymKind::Arrow: m = m * pt.X[s.idx]; break;
        case SymKind::Inv: m = m * pt.Ginv[s.idx]; break;
        case SymKind::Partial: m = m * cots[perm[slot++]][s.idx]; break;
        default: throw AlgebraError("unexpected symbol in polyvector evaluation");
      }
    }
    return m;
  });
}

namespace {

struct DualMat {
  RMat v, d;
};

DualMat dualMul(const DualMat& a, const DualMat& b) {
  return {a.v * b.v, a.v * b.d + a.d * b.v};
}

DualMat dualInverse(const DualMat& a) {
  auto inv = tryInverse(a.v);
  if (!inv) throw AlgebraError("dual inverse of a singular matrix");
  return {*inv, -(*inv) * a.d * (*inv)};
}

DualMat evalWordDual(const MatrixPoint& pt, const Word& w, const Tangent& t) {
  const Algebra& alg = *pt.alg;
  int n = pt.alpha.at(alg.tailOf(w));
  DualMat m{identity(n), RMat::Zero(n, n)};
  for (Sym s : w.syms) {
    switch (s.kind) {
      case SymKind::Idem: break;
      case SymKind::Arrow: m = dualMul(m, {pt.X[s.idx], t[s.idx]}); break;
      case SymKind::Inv: {
        int c = s.idx, cs = DoubleQuiver::reverse(c);
        DualMat xc{pt.X[c], t[c]}, xcs{pt.X[cs], t[cs]};
        DualMat onePlus = dualMul(xc, xcs);
        onePlus.v += identity(onePlus.v.rows());
        m = dualMul(m, dualInverse(onePlus));
        break;
      }
      default: throw AlgebraError("dual evaluation of a non-algebra word");
    }
  }
  return m;
}

}  // namespace

RMat dualDerivativeWord(const MatrixPoint& pt, const Word& w, const Tangent& t) {
  return evalWordDual(pt, w, t).d;
}

Rat dualDerivativeTrace(const MatrixPoint& pt, const Element& x, const Tangent& t) {
  Rat out(0);
  for (const auto& [w, c] : x.terms()) out += c * evalWordDual(pt, w, t).d.trace();
  return out;
}

RMat dualDerivativeElement(const MatrixPoint& pt, const Element& x, int p, int q, const Tangent& t) {
  const Algebra& alg = *pt.alg;
  RMat m = RMat::Zero(pt.alpha.at(p), pt.alpha.at(q));
  for (const auto& [w, c] : x.terms())
    if (alg.tailOf(w) == p && alg.headOf(w) == q) m += c * evalWordDual(pt, w, t).d;
  return m;
}

Tangent zeroTangent(const MatrixPoint& pt) {
  Tangent t(pt.alg->arrowCount());
  for (int c = 0; c < pt.alg->arrowCount(); ++c)
    t[c] = RMat::Zero(pt.alpha.at(pt.alg->dquiver().tail(c)), pt.alpha.at(pt.alg->dquiver().head(c)));
  return t;
}

Tangent zeroCotangent(const MatrixPoint& pt) {
  Tangent t(pt.alg->arrowCount());
  for (int c = 0; c < pt.alg->arrowCount(); ++c)
    t[c] = RMat::Zero(pt.alpha.at(pt.alg->dquiver().head(c)), pt.alpha.at(pt.alg->dquiver().tail(c)));
  return t;
}

int tangentDim(const MatrixPoint& pt) {
  int d = 0;
  for (int c = 0; c < pt.alg->arrowCount(); ++c)
    d += pt.alpha.at(pt.alg->dquiver().tail(c)) * pt.alpha.at(pt.alg->dquiver().head(c));
  return d;
}

std::vector<Tangent> tangentBasis(const MatrixPoint& pt) {
  std::vector<Tangent> basis;
  for (int c = 0; c < pt.alg->arrowCount(); ++c) {
    int rows = pt.alpha.at(pt.alg->dquiver().tail(c));
    int cols = pt.alpha.at(pt.alg->dquiver().head(c));
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) {
        Tangent t = zeroTangent(pt);
        t[c](i, j) = Rat(1);
        basis.push_back(std::move(t));
      }
  }
  return basis;
}

Tangent entryField(const MatrixPoint& pt, const DDeriv& d, int i, int j) {
  const Algebra& alg = *pt.alg;
  Tangent field = zeroTangent(pt);
  for (int c = 0; c < alg.arrowCount(); ++c) {
    for (const auto& [legs, coef] : d.coord(c).terms()) {
      RMat l = evalWord(pt, legs[0]);
      RMat r = evalWord(pt, legs[1]);
      if (j >= l.cols() || i >= r.rows()) throw AlgebraError("entry index out of range");
      field[c] += coef * (l.col(j) * r.row(i));
    }
  }
  return field;
}

Rat entryBracket(const MatrixPoint& pt, const Tensor& beta, int i, int j, int u, int v) {
  Rat out(0);
  for (const auto& [legs, coef] : beta.terms()) {
    RMat l = evalWord(pt, legs[0]);
    RMat r = evalWord(pt, legs[1]);
    if (u >= l.rows() || j >= l.cols() || i >= r.rows() || v >= r.cols())
      throw AlgebraError("entry index out of range");
    out += coef * l(u, j) * r(i, v);
  }
  return out;
}

}  // namespace ncqh
