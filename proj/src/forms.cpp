#include "ncqh/forms.hpp"

namespace ncqh {

namespace {

Element singleWord(const Algebra& alg, const Word& w, std::size_t b, std::size_t e, int fallbackVertex) {
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

// d of one symbol; zero tensor legs mean "no contribution".
Element dSym(const Algebra& alg, Sym s) {
  switch (s.kind) {
    case SymKind::Arrow:
      return alg.diff(s.idx);
    case SymKind::Idem:
      return alg.zero();
    case SymKind::Inv: {
      int c = s.idx, cs = DoubleQuiver::reverse(c);
      Element inner = alg.diff(c) * alg.arrow(cs) + alg.arrow(c) * alg.diff(cs);
      return Rat(-1) * (alg.inv(c) * inner * alg.inv(c));
    }
    case SymKind::Diff:
      return alg.zero();
    default:
      throw AlgebraError("d applied to a symbol outside Omega A");
  }
}

}  // namespace

Element d(const Element& x) {
  const Algebra& alg = *x.alg();
  Element out(&alg);
  for (const auto& [w, c] : x.terms()) {
    int degBefore = 0;
    for (std::size_t i = 0; i < w.syms.size(); ++i) {
      Sym s = w.syms[i];
      if (symOdd(s)) { ++degBefore; continue; }
      Element ds = dSym(alg, s);
      if (ds.isZero()) continue;
      Element pre = singleWord(alg, w, 0, i, alg.tailOf(s));
      Element post = singleWord(alg, w, i + 1, w.syms.size(), alg.headOf(s));
      Rat sign((degBefore & 1) ? -1 : 1);
      out += (sign * c) * (pre * ds * post);
    }
  }
  return out;
}

Tensor iContractForm(const DDeriv& delta, const Element& form) {
  const Algebra& alg = *form.alg();
  Tensor out(&alg, 2);
  for (const auto& [w, c] : form.terms()) {
    int degBefore = 0;
    for (std::size_t i = 0; i < w.syms.size(); ++i) {
      Sym s = w.syms[i];
      if (s.kind == SymKind::Diff) {
        const Tensor& v = delta.coord(s.idx);
        if (!v.isZero()) {
          Element pre = singleWord(alg, w, 0, i, alg.tailOf(s));
          Element post = singleWord(alg, w, i + 1, w.syms.size(), alg.headOf(s));
          Rat sign((degBefore & 1) ? -1 : 1);
          out += (sign * c) * v.mulLeg(0, pre, true).mulLeg(1, post, false);
        }
      }
      if (symOdd(s)) ++degBefore;
    }
  }
  return out;
}

Element iotaForm(const DDeriv& delta, const Element& form) {
  return iContractForm(delta, form).circContract();
}

Tensor dLegwise(const Tensor& t) {
  Tensor out(t.alg(), t.legs());
  for (const auto& [legs, c] : t.terms()) {
    for (int i = 0; i < t.legs(); ++i) {
      Element leg(t.alg());
      leg.addTerm(legs[i], Rat(1));
      Element dleg = d(leg);
      if (dleg.isZero()) continue;
      int degBefore = 0;
      for (int j = 0; j < i; ++j) degBefore += legs[j].degree();
      Rat sign((degBefore & 1) ? -1 : 1);
      for (const auto& [dw, dc] : dleg.terms()) {
        std::vector<Word> nt = legs;
        nt[i] = dw;
        out.addTerm(nt, sign * c * dc);
      }
    }
  }
  return out;
}

Tensor lieL(const DDeriv& delta, const Element& form) {
  return dLegwise(iContractForm(delta, form)) + iContractForm(delta, d(form));
}

Element scriptL(const DDeriv& delta, const Element& form) {
  return lieL(delta, form).circContract();
}

Tensor iContractPoly(const Element& eta, const Element& poly) {
  const Algebra& alg = *poly.alg();
  // Split eta into (u, arrow, v) triples around its d-symbols.
  struct Piece { Element u, v; Rat c; };
  std::vector<std::vector<Piece>> byArrow(alg.arrowCount());
  for (const auto& [w, c] : eta.terms()) {
    int at = -1;
    for (std::size_t i = 0; i < w.syms.size(); ++i)
      if (w.syms[i].kind == SymKind::Diff) {
        if (at >= 0) throw AlgebraError("contraction needs a 1-form");
        at = static_cast<int>(i);
      }
    if (at < 0) throw AlgebraError("1-form word lacks a d-symbol");
    Sym s = w.syms[at];
    byArrow[s.idx].push_back({singleWord(alg, w, 0, at, alg.tailOf(s)),
                              singleWord(alg, w, at + 1, w.syms.size(), alg.headOf(s)), c});
  }
  Tensor out(&alg, 2);
  for (const auto& [w, c] : poly.terms()) {
    int degBefore = 0;
    for (std::size_t i = 0; i < w.syms.size(); ++i) {
      Sym s = w.syms[i];
      if (s.kind == SymKind::Partial) {
        for (const Piece& p : byArrow[s.idx]) {
          // <u d(c) v, x D(c) y> = (x v) (x) (u y)
          Element pre = singleWord(alg, w, 0, i, alg.tailOf(s));
          Element post = singleWord(alg, w, i + 1, w.syms.size(), alg.headOf(s));
          Rat sign((degBefore & 1) ? -1 : 1);
          out += (sign * c * p.c) * tensorOf(pre * p.v, p.u * post);
        }
      }
      if (symOdd(s)) ++degBefore;
    }
  }
  return out;
}

Element iotaPoly(const Element& eta, const Element& poly) {
  return iContractPoly(eta, poly).circContract();
}

Tensor pr1(const Tensor& t) {
  Tensor out(t.alg(), t.legs());
  for (const auto& [legs, c] : t.terms())
    if (legs[0].degree() == 0) out.addTerm(legs, c);
  return out;
}

}  // namespace ncqh
