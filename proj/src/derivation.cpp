#include "ncqh/derivation.hpp"

namespace ncqh {

DDeriv::DDeriv(const Algebra* a) : alg_(a), coords_(a->arrowCount(), Tensor(a, 2)) {}

DDeriv& DDeriv::operator+=(const DDeriv& o) {
  for (int c = 0; c < static_cast<int>(coords_.size()); ++c) coords_[c] += o.coords_[c];
  return *this;
}

DDeriv operator*(const Rat& c, DDeriv d) {
  for (auto& t : d.coords_) t = c * t;
  return d;
}

namespace {

Element subword(const Algebra& alg, const Word& w, std::size_t b, std::size_t e, int fallbackVertex) {
  Element out(&alg);
  if (b >= e) {
    out.addTerm(Word({{SymKind::Idem, fallbackVertex}}), Rat(1));
    return out;
  }
  Word sub;
  sub.syms.assign(w.syms.begin() + b, w.syms.begin() + e);
  out.addTerm(sub, Rat(1));
  return out;
}

// Value of d on a single algebra symbol.
Tensor symValue(const DDeriv& d, Sym s) {
  const Algebra& alg = *d.alg();
  switch (s.kind) {
    case SymKind::Arrow:
      return d.coord(s.idx);
    case SymKind::Idem:
      return Tensor(&alg, 2);
    case SymKind::Inv: {
      int c = s.idx;
      int cs = DoubleQuiver::reverse(c);
      Tensor dcc = d.coord(c).mulLeg(1, alg.arrow(cs), false) +
                   d.coord(cs).mulLeg(0, alg.arrow(c), true);
      return Rat(-1) * dcc.mulLeg(0, alg.inv(c), true).mulLeg(1, alg.inv(c), false);
    }
    default:
      throw AlgebraError("double derivation applied to a non-algebra symbol");
  }
}

}  // namespace

Tensor applyD(const DDeriv& d, const Element& x) {
  const Algebra& alg = *d.alg();
  Tensor out(&alg, 2);
  for (const auto& [w, c] : x.terms()) {
    for (std::size_t i = 0; i < w.syms.size(); ++i) {
      if (w.syms[i].kind == SymKind::Idem) continue;
      Tensor v = symValue(d, w.syms[i]);
      if (v.isZero()) continue;
      Element pre = subword(alg, w, 0, i, alg.tailOf(w.syms[i]));
      Element post = subword(alg, w, i + 1, w.syms.size(), alg.headOf(w.syms[i]));
      out += c * v.mulLeg(0, pre, true).mulLeg(1, post, false);
    }
  }
  return out;
}

DDeriv partialD(const Algebra& alg, int c) {
  DDeriv d(&alg);
  Tensor t(&alg, 2);
  t.addTerm({Word({{SymKind::Idem, alg.dquiver().tail(c)}}),
             Word({{SymKind::Idem, alg.dquiver().head(c)}})},
            Rat(1));
  d.coord(c) = t;
  return d;
}

DDeriv canonicalE(const Algebra& alg, int p) {
  DDeriv d(&alg);
  for (int c = 0; c < alg.arrowCount(); ++c) {
    Tensor t(&alg, 2);
    Word ce({{SymKind::Arrow, c}});
    Word ep({{SymKind::Idem, p}});
    if (alg.dquiver().head(c) == p) t.addTerm({ce, ep}, Rat(1));
    if (alg.dquiver().tail(c) == p) t.addTerm({ep, ce}, Rat(-1));
    d.coord(c) = t;
  }
  return d;
}

DDeriv canonicalETotal(const Algebra& alg) {
  DDeriv d(&alg);
  for (int p : alg.vertices()) d += canonicalE(alg, p);
  return d;
}

Element wordForm(const DDeriv& d) {
  const Algebra& alg = *d.alg();
  Element out(&alg);
  for (int c = 0; c < alg.arrowCount(); ++c) {
    for (const auto& [t, coef] : d.coord(c).terms()) {
      Word w = t[1];  // second leg on the left of D(c)
      w.syms.push_back({SymKind::Partial, c});
      w.syms.insert(w.syms.end(), t[0].syms.begin(), t[0].syms.end());
      Element nf = alg.normalWord(w);
      for (const auto& [nw, nc] : nf.terms()) out.addTerm(nw, coef * nc);
    }
  }
  return out;
}

DDeriv derivFromElement(const Element& x) {
  const Algebra& alg = *x.alg();
  DDeriv d(&alg);
  for (const auto& [w, c] : x.terms()) {
    int at = -1;
    for (std::size_t i = 0; i < w.syms.size(); ++i)
      if (w.syms[i].kind == SymKind::Partial) {
        if (at >= 0) throw AlgebraError("not a degree-1 polyvector word");
        at = static_cast<int>(i);
      }
    if (at < 0) throw AlgebraError("word has no partial symbol");
    int arrowId = w.syms[at].idx;
    Element pre = subword(alg, w, 0, at, alg.tailOf(w.syms[at]));
    Element post = subword(alg, w, at + 1, w.syms.size(), alg.headOf(w.syms[at]));
    d.coord(arrowId) += c * tensorOf(post, pre);
  }
  return d;
}

Element eWordAt(const Algebra& alg, int p) {
  Element out(&alg);
  for (int c = 0; c < alg.arrowCount(); ++c) {
    if (alg.dquiver().tail(c) != p) continue;
    int cs = DoubleQuiver::reverse(c);
    out += alg.partial(cs) * alg.arrow(cs) - alg.arrow(c) * alg.partial(c);
  }
  return out;
}

Element eWordTotal(const Algebra& alg) {
  Element out(&alg);
  for (int p : alg.vertices()) out += eWordAt(alg, p);
  return out;
}

}  // namespace ncqh
