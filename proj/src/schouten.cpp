#include "ncqh/schouten.hpp"

namespace ncqh {

namespace {

Element oneWord(const Algebra& alg, const Word& w) {
  Element e(&alg);
  e.addTerm(w, Rat(1));
  return e;
}

bool isAlgebraSym(Sym s) {
  return s.kind == SymKind::Idem || s.kind == SymKind::Arrow || s.kind == SymKind::Inv;
}

// {{sx, sy}} on single symbols.
Tensor snBase(const Algebra& alg, Sym sx, Sym sy) {
  if (isAlgebraSym(sx) && isAlgebraSym(sy)) return Tensor(&alg, 2);
  if (sx.kind == SymKind::Partial && isAlgebraSym(sy))
    return applyD(partialD(alg, sx.idx), alg.sym(sy));
  if (isAlgebraSym(sx) && sy.kind == SymKind::Partial) {
    // {{a, D(c)}} = -{{D(c), a}}^flip (all legs even, plain swap).
    return Rat(-1) * applyD(partialD(alg, sy.idx), alg.sym(sx)).flip();
  }
  if (sx.kind == SymKind::Partial && sy.kind == SymKind::Partial) return Tensor(&alg, 2);
  throw AlgebraError("Schouten bracket applied outside DA");
}

// Reduction order: the second argument is peeled by the outer Leibniz rule
// {{X, y R}} = {{X, y}} R + (-1)^{(|X|+1)|y|} y {{X, R}}; once it is a single
// symbol, a multi-symbol first argument flips through graded antisymmetry
// {{X, s}} = -(-1)^{(|X|+1)(|s|+1)} {{s, X}}^flip, whose right side lands in
// the Leibniz case again.
Tensor snWords(const Algebra& alg, const Word& wx, const Word& wy) {
  if (wy.syms.size() > 1) {
    Sym y0 = wy.syms[0];
    Word rest;
    rest.syms.assign(wy.syms.begin() + 1, wy.syms.end());
    int degX = wx.degree();
    int degY0 = symOdd(y0) ? 1 : 0;
    Tensor t1 = snWords(alg, wx, Word({y0})).mulLeg(1, oneWord(alg, rest), false);
    Rat sign((((degX + 1) * degY0) & 1) ? -1 : 1);
    Tensor t2 = snWords(alg, wx, rest).mulLeg(0, alg.sym(y0), true);
    return t1 + sign * t2;
  }
  if (wx.syms.size() == 1) return snBase(alg, wx.syms[0], wy.syms[0]);
  int degX = wx.degree(), degY = wy.degree();
  Tensor t = snWords(alg, wy, wx);
  Rat sign((((degX + 1) * (degY + 1)) & 1) ? 1 : -1);
  return sign * t.flip();
}

}  // namespace

Tensor snBracket(const Element& X, const Element& Y) {
  const Algebra& alg = *(X.alg() ? X.alg() : Y.alg());
  Tensor out(&alg, 2);
  for (const auto& [wx, cx] : X.terms())
    for (const auto& [wy, cy] : Y.terms()) out += (cx * cy) * snWords(alg, wx, wy);
  return out;
}

Element modBracket(const Element& X, const Element& Y) {
  const Algebra& alg = *(X.alg() ? X.alg() : Y.alg());
  Tensor b = snBracket(X, Y);
  Element prod(&alg);
  for (const auto& [legs, c] : b.terms()) {
    Element nf = alg.normalWord(concat(legs[0], legs[1]));
    for (const auto& [w, nc] : nf.terms()) prod.addTerm(w, c * nc);
  }
  return alg.cyclicReduce(prod);
}

namespace {

// {{x, u (x) v}}_L = {{x, u}} (x) v.
Tensor leftExtend(const DoubleBracket& beta, const Element& x, const Tensor& t) {
  const Algebra& alg = *t.alg();
  Tensor out(&alg, 3);
  for (const auto& [legs, c] : t.terms()) {
    Element u(&alg);
    u.addTerm(legs[0], Rat(1));
    Tensor bu = beta(x, u);
    for (const auto& [bl, bc] : bu.terms()) out.addTerm({bl[0], bl[1], legs[1]}, c * bc);
  }
  return out;
}

int parity(int n) { return n & 1; }

}  // namespace

Tensor tripleBracket(const DoubleBracket& beta, const Element& a, const Element& b,
                     const Element& c, int shift) {
  const Algebra* alg = a.alg() ? a.alg() : (b.alg() ? b.alg() : c.alg());
  int da = a.degree(), db = b.degree(), dc = c.degree();
  Tensor t1 = leftExtend(beta, a, beta(b, c));
  Tensor t2 = leftExtend(beta, b, beta(c, a)).permuted({1, 2, 0});
  Tensor t3 = leftExtend(beta, c, beta(a, b)).permuted({2, 0, 1});
  Rat s2(parity((da + shift) * (db + dc)) ? -1 : 1);
  Rat s3(parity((dc + shift) * (da + db)) ? -1 : 1);
  Tensor out(alg, 3);
  out += t1;
  out += s2 * t2;
  out += s3 * t3;
  return out;
}

PBracket::PBracket(const Element& P) : alg_(P.alg()) {
  const Algebra& alg = *alg_;
  for (const auto& [w, c] : P.terms()) {
    int i1 = -1, i2 = -1;
    for (std::size_t i = 0; i < w.syms.size(); ++i)
      if (w.syms[i].kind == SymKind::Partial) {
        if (i1 < 0) i1 = static_cast<int>(i);
        else if (i2 < 0) i2 = static_cast<int>(i);
        else throw AlgebraError("P must have degree 2");
      }
    if (i2 < 0) throw AlgebraError("P must have degree 2");
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
    Sym c1 = w.syms[i1], c2 = w.syms[i2];
    Element pre = piece(0, i1, alg.tailOf(c1));
    Element mid = piece(i1 + 1, i2, alg.headOf(c1));
    Element post = piece(i2 + 1, w.syms.size(), alg.headOf(c2));
    Summand s{c, DDeriv(&alg), DDeriv(&alg)};
    // word pre D(c1) | mid D(c2) post: delta = pre D(c1), Delta = mid D(c2) post.
    s.delta.coord(c1.idx) = tensorOf(alg.idem(alg.headOf(c1)), pre);
    s.Delta.coord(c2.idx) = tensorOf(post, mid);
    summands_.push_back(std::move(s));
  }
}

namespace {

// (T' S'') (x) (S' T'') for two-leg tensors.
Tensor crossMul(const Tensor& S, const Tensor& T) {
  const Algebra& alg = *S.alg();
  Tensor out(&alg, 2);
  for (const auto& [s, cs] : S.terms())
    for (const auto& [t, ct] : T.terms()) {
      Element left = alg.normalWord(concat(t[0], s[1]));
      Element right = alg.normalWord(concat(s[0], t[1]));
      out += (cs * ct) * tensorOf(left, right);
    }
  return out;
}

}  // namespace

Tensor PBracket::operator()(const Element& a, const Element& b) const {
  Tensor out(alg_, 2);
  for (const Summand& s : summands_) {
    Tensor da = applyD(s.delta, a);
    Tensor Db = applyD(s.Delta, b);
    Tensor db = applyD(s.delta, b);
    Tensor Da = applyD(s.Delta, a);
    out += s.coef * (crossMul(da, Db) - crossMul(Da, db));
  }
  return out;
}

DDeriv hamiltonian(const PBracket& beta, const Element& a) {
  const Algebra& alg = *beta.alg();
  DDeriv h(&alg);
  for (int c = 0; c < alg.arrowCount(); ++c) h.coord(c) = beta(a, alg.arrow(c));
  return h;
}

}  // namespace ncqh
