#include "ncqh/pairing.hpp"

#include "ncqh/derivation.hpp"
#include "ncqh/forms.hpp"

namespace ncqh {

SymKind genKind(FreeMod m) {
  switch (m) {
    case FreeMod::OmegaA: return SymKind::Diff;
    case FreeMod::DA: return SymKind::Partial;
    case FreeMod::AEA: return SymKind::GenE;
    case FreeMod::AdPhiA: return SymKind::GenDPhi;
    case FreeMod::AEStarA: return SymKind::GenEStar;
    case FreeMod::AdPhiStarA: return SymKind::GenDPhiStar;
  }
  return SymKind::Diff;
}

FreeMod dualMod(FreeMod m) {
  switch (m) {
    case FreeMod::OmegaA: return FreeMod::DA;
    case FreeMod::DA: return FreeMod::OmegaA;
    case FreeMod::AEA: return FreeMod::AEStarA;
    case FreeMod::AEStarA: return FreeMod::AEA;
    case FreeMod::AdPhiA: return FreeMod::AdPhiStarA;
    case FreeMod::AdPhiStarA: return FreeMod::AdPhiA;
  }
  return m;
}

bool vertexIndexed(FreeMod m) { return m != FreeMod::OmegaA && m != FreeMod::DA; }

std::vector<int> basisIndices(const Algebra& alg, FreeMod m) {
  if (vertexIndexed(m)) return alg.vertices();
  std::vector<int> out;
  for (int c = 0; c < alg.arrowCount(); ++c) out.push_back(c);
  return out;
}

Element basisElement(const Algebra& alg, FreeMod m, int idx) {
  return alg.sym({genKind(m), idx});
}

namespace {

// Splits a degree-1 word of a free module around its generator symbol.
struct GenSplit {
  Element pre, post;
  int idx;
};

GenSplit splitAtGen(const Algebra& alg, const Word& w, SymKind k) {
  int at = -1;
  for (std::size_t i = 0; i < w.syms.size(); ++i)
    if (w.syms[i].kind == k) {
      if (at >= 0) throw AlgebraError("word has two module generators");
      at = static_cast<int>(i);
    }
  if (at < 0) throw AlgebraError("word lacks the module generator");
  auto piece = [&](std::size_t b, std::size_t e, int fallback) {
    Element out(&alg);
    if (b >= e) {
      out.addTerm(Word({{SymKind::Idem, fallback}}), Rat(1));
      return out;
    }
    Word sub;
    sub.syms.assign(w.syms.begin() + b, w.syms.begin() + e);
    out.addTerm(sub, Rat(1));
    return out;
  };
  return {piece(0, at, alg.tailOf(w.syms[at])),
          piece(at + 1, w.syms.size(), alg.headOf(w.syms[at])), w.syms[at].idx};
}

SymKind findGenKind(const Algebra& alg, const Word& w) {
  for (Sym s : w.syms)
    if (s.kind >= SymKind::Diff) return s.kind;
  throw AlgebraError("word carries no module generator");
}

}  // namespace

Element BimodMap::apply(const Element& x) const {
  const Algebra& a = *alg;
  Element out(&a);
  SymKind k = genKind(src);
  for (const auto& [w, c] : x.terms()) {
    GenSplit s = splitAtGen(a, w, k);
    auto it = img.find(s.idx);
    if (it == img.end()) continue;
    out += c * (s.pre * it->second * s.post);
  }
  return out;
}

Tensor pairEval(const Element& a, const Element& b) {
  const Algebra& alg = *(a.alg() ? a.alg() : b.alg());
  Tensor out(&alg, 2);
  if (a.isZero() || b.isZero()) return out;
  for (const auto& [wa, ca] : a.terms()) {
    GenSplit sa = splitAtGen(alg, wa, findGenKind(alg, wa));
    SymKind ka = findGenKind(alg, wa);
    for (const auto& [wb, cb] : b.terms()) {
      SymKind kb = findGenKind(alg, wb);
      GenSplit sb = splitAtGen(alg, wb, kb);
      if (sa.idx != sb.idx) continue;
      bool dual = (ka == SymKind::Diff && kb == SymKind::Partial) ||
                  (ka == SymKind::Partial && kb == SymKind::Diff) ||
                  (ka == SymKind::GenE && kb == SymKind::GenEStar) ||
                  (ka == SymKind::GenEStar && kb == SymKind::GenE) ||
                  (ka == SymKind::GenDPhi && kb == SymKind::GenDPhiStar) ||
                  (ka == SymKind::GenDPhiStar && kb == SymKind::GenDPhi);
      if (!dual) throw AlgebraError("pairing of non-dual module elements");
      out += (ca * cb) * tensorOf(sb.pre * sa.post, sa.pre * sb.post);
    }
  }
  return out;
}

bool isAntisymmetric(const BimodMap& alpha) {
  const Algebra& alg = *alpha.alg;
  auto idxs = basisIndices(alg, alpha.src);
  for (int i : idxs)
    for (int j : idxs) {
      Element pi = basisElement(alg, alpha.src, i);
      Element pj = basisElement(alg, alpha.src, j);
      auto ai = alpha.img.count(i) ? alpha.img.at(i) : alg.zero();
      auto aj = alpha.img.count(j) ? alpha.img.at(j) : alg.zero();
      Tensor lhs = pairEval(pi, aj);
      Tensor rhs = pairEval(pj, ai).permuted({1, 0});  // plain swap, legs even
      if (!(lhs + rhs == Tensor(&alg, 2))) return false;
    }
  return true;
}

Element omegaFromMap(const BimodMap& alpha) {
  const Algebra& alg = *alpha.alg;
  Element out(&alg);
  for (const auto& [idx, img] : alpha.img)
    out += img * basisElement(alg, dualMod(alpha.src), idx);
  return Rat(-1, 2) * out;
}

BimodMap adjointOf(const BimodMap& alpha) {
  const Algebra& alg = *alpha.alg;
  BimodMap beta;
  beta.alg = &alg;
  beta.src = dualMod(alpha.dst);
  beta.dst = dualMod(alpha.src);
  for (int j : basisIndices(alg, beta.src)) {
    Element qj = basisElement(alg, beta.src, j);
    Element img(&alg);
    for (int i : basisIndices(alg, alpha.src)) {
      if (!alpha.img.count(i)) continue;
      Tensor v = pairEval(alpha.img.at(i), qj);
      Element qi = basisElement(alg, dualMod(alpha.src), i);
      for (const auto& [legs, c] : v.terms()) {
        Element l(&alg), r(&alg);
        l.addTerm(legs[0], Rat(1));
        r.addTerm(legs[1], Rat(1));
        img += c * (l * qi * r);
      }
    }
    beta.img[j] = img;
  }
  return beta;
}

bool iotaAllZero(const Element& omega) {
  const Algebra& alg = *omega.alg();
  if (omega.isZero()) return true;
  int n = omega.degree();
  Element recon(&alg);
  bool allZero = true;
  for (int c = 0; c < alg.arrowCount(); ++c) {
    Element ic = iotaForm(partialD(alg, c), omega);
    if (!ic.isZero()) allZero = false;
    recon += alg.diff(c) * ic;
  }
  // q_a iota_{p_a}(omega) = n omega mod commutators
  Element lhs = alg.cyclicReduce(recon);
  Element rhs = alg.cyclicReduce(Rat(n) * omega);
  if (!(lhs == rhs)) throw AlgebraError("dual-basis reconstruction identity failed");
  return allZero;
}

bool pr1AllZero(const Element& eta) {
  const Algebra& alg = *eta.alg();
  if (eta.isZero()) return true;
  Element recon(&alg);
  bool allZero = true;
  for (int c = 0; c < alg.arrowCount(); ++c) {
    Tensor p = pr1(iContractForm(partialD(alg, c), eta));
    if (!p.isZero()) allZero = false;
    for (const auto& [legs, coef] : p.terms()) {
      Element l(&alg), r(&alg);
      l.addTerm(legs[0], Rat(1));
      r.addTerm(legs[1], Rat(1));
      recon += coef * (l * alg.diff(c) * r);
    }
  }
  if (!(recon == eta)) throw AlgebraError("pr1 reconstruction identity failed");
  return allZero;
}

}  // namespace ncqh
