#include "doctest.h"

#include "ncqh/element.hpp"
#include "ncqh/invert.hpp"
#include "ncqh/rng.hpp"
#include "ncqh/tensor.hpp"
#include "test_helpers.hpp"

using namespace ncqh;
using namespace ncqh::testutil;

namespace {

Word rawWord(std::initializer_list<Sym> syms) { return Word(std::vector<Sym>(syms)); }

// Random composable raw word over arrows, inverses and idempotents.
Word randomRaw(const Algebra& alg, Rng& rng, int len) {
  Word w;
  int at = alg.vertices()[rng.below(alg.vertices().size())];
  for (int i = 0; i < len; ++i) {
    std::vector<Sym> options;
    for (int c = 0; c < alg.arrowCount(); ++c) {
      if (alg.dquiver().tail(c) == at) {
        options.push_back({SymKind::Arrow, c});
        options.push_back({SymKind::Inv, c});
      }
    }
    options.push_back({SymKind::Idem, at});
    Sym pick = options[rng.below(options.size())];
    w.syms.push_back(pick);
    at = alg.headOf(pick);
  }
  return w;
}

// Reduce with a randomized strategy: apply a random applicable rule position
// until a fixed point; used for the confluence experiment.
Element randomStrategyReduce(const Algebra& alg, const Word& start, Rng& rng) {
  Element acc(&alg);
  // worklist of (word, coefficient)
  std::vector<std::pair<Word, Rat>> todo{{start, Rat(1)}};
  while (!todo.empty()) {
    auto [w, coef] = todo.back();
    todo.pop_back();
    if (!alg.composable(w)) continue;
    // strip idempotents
    Word f;
    for (Sym s : w.syms)
      if (s.kind != SymKind::Idem) f.syms.push_back(s);
    if (f.syms.empty()) {
      acc.addTerm(Word({{SymKind::Idem, alg.tailOf(w.syms.front())}}), coef);
      continue;
    }
    struct Redex { std::size_t pos; bool r2; };
    std::vector<Redex> redexes;
    const auto& s = f.syms;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (i + 2 < s.size() && s[i].kind == SymKind::Arrow && s[i + 1].kind == SymKind::Arrow &&
          s[i + 1].idx == DoubleQuiver::reverse(s[i].idx) && s[i + 2].kind == SymKind::Inv &&
          s[i + 2].idx == s[i].idx)
        redexes.push_back({i, true});
      if (i + 1 < s.size() && s[i].kind == SymKind::Inv && s[i + 1].kind == SymKind::Arrow &&
          s[i + 1].idx == s[i].idx)
        redexes.push_back({i, false});
    }
    if (redexes.empty()) {
      acc.addTerm(f, coef);
      continue;
    }
    Redex r = redexes[rng.below(redexes.size())];
    if (r.r2) {
      Word shorter, swapped;
      shorter.syms.assign(s.begin(), s.begin() + r.pos);
      swapped.syms = shorter.syms;
      shorter.syms.insert(shorter.syms.end(), s.begin() + r.pos + 3, s.end());
      swapped.syms.push_back({SymKind::Inv, s[r.pos].idx});
      swapped.syms.insert(swapped.syms.end(), s.begin() + r.pos + 3, s.end());
      if (shorter.syms.empty())
        shorter.syms.push_back({SymKind::Idem, alg.dquiver().tail(s[r.pos].idx)});
      todo.push_back({shorter, coef});
      todo.push_back({swapped, -coef});
    } else {
      Word next;
      next.syms.assign(s.begin(), s.begin() + r.pos);
      next.syms.push_back({SymKind::Arrow, s[r.pos].idx});
      next.syms.push_back({SymKind::Inv, DoubleQuiver::reverse(s[r.pos].idx)});
      next.syms.insert(next.syms.end(), s.begin() + r.pos + 2, s.end());
      todo.push_back({next, coef});
    }
  }
  return acc;
}

}  // namespace

TEST_CASE("normal form: localization identities") {
  auto alg = basicAlgebra();
  Element a = alg->arrow(0), as = alg->arrow(1), ga = alg->inv(0);

  // a a* g_a = e_1 - g_a
  CHECK(a * as * ga == alg->idem(1) - ga);
  // g_a a = a g_{a*}
  CHECK(ga * a == a * alg->inv(1));
  // a a = 0 (not composable)
  CHECK((a * a).isZero());
  // g_a a a* = e_1 - g_a (derived through the star-swap chain)
  CHECK(ga * a * as == alg->idem(1) - ga);
  // e_1 a e_2 = a
  CHECK(alg->idem(1) * a * alg->idem(2) == a);
  // a* a g_a is already normal (on the loop quiver, where it composes)
  auto l = loopAlgebra();
  Element fixed = l->arrow(1) * l->arrow(0) * l->inv(0);
  CHECK(fixed.termCount() == 1);
  CHECK(fixed.terms().begin()->first.size() == 3);
}

TEST_CASE("normal form is a fixed point and inverse laws hold") {
  auto alg = basicAlgebra();
  Element ga = alg->inv(0);
  CHECK(alg->onePlus(0) * ga == alg->idem(1));
  CHECK(ga * alg->onePlus(0) == alg->idem(1));
  CHECK(alg->onePlus(1) * alg->inv(1) == alg->idem(2));
}

TEST_CASE("multiply: associativity, distributivity, B-linearity at random") {
  auto alg = loopAlgebra();
  Rng rng(101);
  for (int t = 0; t < 60; ++t) {
    Element xs = alg->fromWord(randomRaw(*alg, rng, 3));
    Element ys = alg->fromWord(randomRaw(*alg, rng, 4));
    Element zs = alg->fromWord(randomRaw(*alg, rng, 2));
    CHECK((xs * ys) * zs == xs * (ys * zs));
    CHECK(xs * (ys + zs) == xs * ys + xs * zs);
    CHECK(alg->unit() * xs == xs);
    CHECK(xs * alg->unit() == xs);
  }
}

TEST_CASE("rewriting confluence: random strategies agree") {
  auto algs = {basicAlgebra(), loopAlgebra(), pathAlgebra2()};
  Rng rng(202);
  int tested = 0;
  for (const auto& alg : algs) {
    for (int t = 0; t < 70; ++t) {
      Word w = randomRaw(*alg, rng, static_cast<int>(rng.range(2, 9)));
      Element reference = alg->normalWord(w);
      for (int s = 0; s < 6; ++s) {
        Element alt = randomStrategyReduce(*alg, w, rng);
        CHECK(alt == reference);
      }
      ++tested;
    }
  }
  CHECK(tested >= 200);
}

TEST_CASE("invert recognizes the localization units") {
  auto alg = basicAlgebra();
  CHECK(invert(alg->onePlus(0)) == alg->inv(0));
  CHECK(invert(alg->inv(0)) == alg->onePlus(0));
  CHECK(!tryInvert(alg->arrow(0)).has_value());
  CHECK_THROWS_AS(invert(alg->arrow(0)), NotARecognizedUnit);

  // products and vertex sums
  Element phi = alg->onePlus(0) + alg->inv(1);
  Element phiInv = invert(phi);
  Element proj = alg->idem(1) + alg->idem(2);
  CHECK(phi * phiInv == proj);
  CHECK(phiInv * phi == proj);

  auto l = loopAlgebra();
  Element u = l->onePlus(0) * l->inv(1) * l->onePlus(0);
  Element ui = invert(u);
  CHECK(u * ui == l->idem(1));
  CHECK(ui * u == l->idem(1));
  CHECK(invert(Rat(3) * l->idem(1)) == Rat(1, 3) * l->idem(1));
}

TEST_CASE("tensor permute carries Koszul signs") {
  auto alg = basicAlgebra();
  Element u = alg->arrow(0), v = alg->arrow(1);
  Tensor t = tensorOf(u, v);
  CHECK(t.permuted({1, 0}) == tensorOf(v, u));

  Element du = alg->diff(0), dv = alg->diff(1);
  Tensor odd = tensorOf(du, dv);
  CHECK(odd.permuted({1, 0}) == Rat(-1) * tensorOf(dv, du));
  CHECK(odd.permuted({0, 1}) == odd);
}

TEST_CASE("circ contraction") {
  auto alg = basicAlgebra();
  Element u = alg->arrow(0), v = alg->arrow(1);
  // degrees 0: circ(u (x) v) = v u
  CHECK(tensorOf(u, v).circContract() == v * u);
  // degrees (1,1): minus sign
  Element du = alg->diff(0), dv = alg->diff(1);
  CHECK(tensorOf(du, dv).circContract() == Rat(-1) * (dv * du));
  // singleton
  CHECK(tensorFromElement(u).circContract() == u);
}

TEST_CASE("cyclic reduction") {
  auto l = loopAlgebra();
  Element a = l->arrow(0), as = l->arrow(1);
  // commutator dies
  CHECK(l->cyclicReduce(a * as - as * a).isZero());
  // rotation invariance
  CHECK(l->cyclicReduce(a * as * a) == l->cyclicReduce(a * a * as));
  // odd-odd: xy + yx maps to zero
  Element da = l->diff(0), das = l->diff(1);
  CHECK(l->cyclicReduce(da * das + das * da).isZero());
  // non-closed words vanish
  auto b = basicAlgebra();
  CHECK(b->cyclicReduce(b->arrow(0)).isZero());
  // cyclic equality through the localization: a* a g_{a*} ~ a g_{a*} a* = e - g_{a*}
  Element lhs = l->cyclicReduce(as * a * l->inv(1));
  Element rhs = l->cyclicReduce(l->idem(1) - l->inv(1));
  CHECK(lhs == rhs);
}

TEST_CASE("cyclic reduction kills graded commutators at random") {
  auto l = loopAlgebra();
  Rng rng(303);
  for (int t = 0; t < 50; ++t) {
    // random homogeneous words with some d-symbols sprinkled in
    auto mk = [&](int len) {
      Word w = randomRaw(*l, rng, len);
      for (Sym& s : w.syms)
        if (s.kind == SymKind::Arrow && rng.below(3) == 0) s.kind = SymKind::Diff;
      return l->fromWord(w);
    };
    Element x = mk(static_cast<int>(rng.range(1, 4)));
    Element y = mk(static_cast<int>(rng.range(1, 4)));
    if (x.isZero() || y.isZero() || !x.isHomogeneous() || !y.isHomogeneous()) continue;
    int sign = (x.degree() * y.degree()) % 2 ? 1 : -1;  // [x,y] = xy - (-1)^{|x||y|} yx
    Element comm = x * y + Rat(sign) * (y * x);
    CHECK(l->cyclicReduce(comm).isZero());
  }
}

TEST_CASE("canonical printing") {
  auto alg = basicAlgebra();
  CHECK((alg->inv(0) * alg->arrow(0)).str() == "a·g_{a*}");
  CHECK((alg->arrow(0) * alg->arrow(1) * alg->inv(0)).str() == "e_1 - g_{a}");
  CHECK(alg->zero().str() == "0");
  CHECK((Rat(3, 2) * alg->arrow(0)).str() == "3/2·a");
  CHECK((alg->diff(0) * alg->arrow(1)).str() == "d(a)·a*");
  CHECK((Rat(-1) * alg->partial(0)).str() == "-D(a)");
}
