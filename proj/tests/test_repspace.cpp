#include "doctest.h"

#include "ncqh/forms.hpp"
#include "ncqh/repspace.hpp"
#include "test_helpers.hpp"

using namespace ncqh;
using namespace ncqh::testutil;

namespace {

DimensionVector uniformAlpha(const Algebra& alg, int n) {
  DimensionVector a;
  for (int p : alg.vertices()) a.alpha[p] = n;
  return a;
}

Word randomRaw(const Algebra& alg, Rng& rng, int len) {
  Word w;
  int at = alg.vertices()[rng.below(alg.vertices().size())];
  for (int i = 0; i < len; ++i) {
    std::vector<Sym> options;
    for (int c = 0; c < alg.arrowCount(); ++c)
      if (alg.dquiver().tail(c) == at) {
        options.push_back({SymKind::Arrow, c});
        options.push_back({SymKind::Inv, c});
      }
    options.push_back({SymKind::Idem, at});
    Sym pick = options[rng.below(options.size())];
    w.syms.push_back(pick);
    at = alg.headOf(pick);
  }
  return w;
}

Tangent randomTangent(const MatrixPoint& pt, Rng& rng) {
  Tangent t = zeroTangent(pt);
  for (auto& m : t)
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j) m(i, j) = rng.smallRat();
  return t;
}

}  // namespace

TEST_CASE("evaluation basics") {
  auto alg = basicAlgebra();
  MatrixPoint pt = randomPoint(*alg, uniformAlpha(*alg, 2), 5);
  CHECK(evalElement(pt, alg->idem(1), 1, 1) == RMat::Identity(2, 2));
  CHECK(evalElement(pt, alg->arrow(0) * alg->arrow(1), 1, 1) == RMat(pt.X[0] * pt.X[1]));
  // g_c evaluates to the cached inverse
  RMat gprod = evalElement(pt, alg->onePlus(0) * alg->inv(0), 1, 1);
  CHECK(gprod == RMat::Identity(2, 2));
}

TEST_CASE("random points are seeded and reproducible") {
  auto alg = basicAlgebra();
  MatrixPoint a = randomPoint(*alg, uniformAlpha(*alg, 2), 42);
  MatrixPoint b = randomPoint(*alg, uniformAlpha(*alg, 2), 42);
  CHECK(a.X[0] == b.X[0]);
  CHECK(a.X[1] == b.X[1]);
  CHECK(a.retries == b.retries);
  MatrixPoint c = randomPoint(*alg, uniformAlpha(*alg, 2), 43);
  CHECK(a.X[0] != c.X[0]);
}

TEST_CASE("rewriting soundness oracle: 200 random words, exact") {
  auto algs = {basicAlgebra(), loopAlgebra(), pathAlgebra2()};
  Rng rng(99);
  int count = 0;
  for (const auto& alg : algs) {
    for (int n : {1, 2}) {
      MatrixPoint pt = randomPoint(*alg, uniformAlpha(*alg, n), 1000 + n);
      for (int t = 0; t < 34; ++t) {
        Word w = randomRaw(*alg, rng, static_cast<int>(rng.range(1, 10)));
        RMat raw = evalWord(pt, w);
        RMat viaNf = evalElement(pt, alg->normalWord(w), alg->tailOf(w), alg->headOf(w));
        CHECK(raw == viaNf);
        ++count;
      }
    }
  }
  CHECK(count >= 200);
}

TEST_CASE("evaluation is an algebra homomorphism on random pairs") {
  auto alg = loopAlgebra();
  Rng rng(7);
  MatrixPoint pt = randomPoint(*alg, uniformAlpha(*alg, 2), 11);
  for (int t = 0; t < 100; ++t) {
    Element x = alg->fromWord(randomRaw(*alg, rng, 3));
    Element y = alg->fromWord(randomRaw(*alg, rng, 4));
    RMat lhs = evalElement(pt, x * y, 1, 1);
    RMat rhs = evalElement(pt, x, 1, 1) * evalElement(pt, y, 1, 1);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("dual-number derivative matches symbolic d on random words") {
  auto algs = {basicAlgebra(), loopAlgebra()};
  Rng rng(55);
  int count = 0;
  for (const auto& alg : algs) {
    MatrixPoint pt = randomPoint(*alg, uniformAlpha(*alg, 2), 77);
    for (int t = 0; t < 50; ++t) {
      Word w = randomRaw(*alg, rng, static_cast<int>(rng.range(1, 7)));
      Element x = alg->normalWord(w);
      if (x.isZero()) continue;
      Tangent tan = randomTangent(pt, rng);
      int p = alg->tailOf(w), q = alg->headOf(w);
      // X(d x)(tangent) vs exact dual-number derivative of X(x)
      Element dx = d(x);
      RMat symbolic = RMat::Zero(pt.alpha.at(p), pt.alpha.at(q));
      for (const auto& [dw, dc] : dx.terms())
        symbolic += dc * evalFormWordMultilinear(pt, dw, {tan});
      RMat numeric = dualDerivativeElement(pt, x, p, q, tan);
      CHECK(symbolic == numeric);
      ++count;
    }
  }
  CHECK(count >= 80);
}

TEST_CASE("form trace evaluation is alternating") {
  auto alg = loopAlgebra();
  MatrixPoint pt = randomPoint(*alg, uniformAlpha(*alg, 2), 3);
  Rng rng(31);
  Element form = alg->diff(0) * alg->diff(1) * alg->arrow(1) * alg->arrow(0);
  Tangent t1 = randomTangent(pt, rng), t2 = randomTangent(pt, rng);
  Rat v12 = evalFormTrace(pt, form, {t1, t2});
  Rat v21 = evalFormTrace(pt, form, {t2, t1});
  CHECK(v12 == -v21);
  // and linear in each slot
  Tangent t3 = randomTangent(pt, rng);
  Tangent sum = t1;
  for (std::size_t c = 0; c < sum.size(); ++c) sum[c] += t3[c];
  CHECK(evalFormTrace(pt, form, {sum, t2}) == v12 + evalFormTrace(pt, form, {t3, t2}));
}

TEST_CASE("trace of a class representative is rotation independent") {
  auto alg = loopAlgebra();
  MatrixPoint pt = randomPoint(*alg, uniformAlpha(*alg, 2), 9);
  Rng rng(41);
  Element w1 = alg->diff(0) * alg->arrow(1) * alg->diff(1) * alg->arrow(0);
  // its cyclic class representative evaluates identically
  Element rep = alg->cyclicReduce(w1);
  Tangent t1 = randomTangent(pt, rng), t2 = randomTangent(pt, rng);
  CHECK(evalFormTrace(pt, w1, {t1, t2}) == evalFormTrace(pt, rep, {t1, t2}));
}
