#include "ncqh/invert.hpp"

namespace ncqh {

namespace {

// Peeling measure: g-symbols outweigh arrows so that stripping a factor off
// a unit strictly decreases it.
std::size_t wordWeight(const Word& w) {
  std::size_t t = 0;
  for (Sym s : w.syms) {
    if (s.kind == SymKind::Arrow) t += 1;
    if (s.kind == SymKind::Inv) t += 2;
  }
  return t;
}

std::tuple<std::size_t, std::size_t, std::size_t> measure(const Element& x) {
  std::size_t mx = 0, total = 0;
  for (const auto& [w, c] : x.terms()) {
    std::size_t ww = wordWeight(w);
    mx = std::max(mx, ww);
    total += ww;
  }
  return {mx, total, x.termCount()};
}

std::optional<Element> invertAt(const Element& x, int p, int depth) {
  const Algebra& alg = *x.alg();
  if (depth > 64 || x.isZero()) return std::nullopt;
  if (x.termCount() == 1) {
    const auto& [w, c] = *x.terms().begin();
    if (w.size() == 1 && w.syms[0].kind == SymKind::Idem)
      return Rat(1) / c * alg.idem(p);
  }
  auto m = measure(x);
  for (int c = 0; c < alg.arrowCount(); ++c) {
    if (alg.dquiver().tail(c) != p) continue;
    // x = (e + c c*) y  =>  x^{-1} = y^{-1} g_c
    Element y = alg.inv(c) * x;
    if (measure(y) < m) {
      if (auto yi = invertAt(y, p, depth + 1)) return *yi * alg.inv(c);
    }
    // x = g_c y  =>  x^{-1} = y^{-1} (e + c c*)
    y = alg.onePlus(c) * x;
    if (measure(y) < m) {
      if (auto yi = invertAt(y, p, depth + 1)) return *yi * alg.onePlus(c);
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<Element> tryInvert(const Element& x) {
  if (x.isZero() || !x.alg()) return std::nullopt;
  const Algebra& alg = *x.alg();
  Element out(&alg);
  Element offdiag = x;
  for (int p : alg.vertices()) offdiag -= x.component(p, p);
  if (!offdiag.isZero()) return std::nullopt;  // units here are B-diagonal
  for (int p : alg.vertices()) {
    Element xp = x.component(p, p);
    if (xp.isZero()) continue;
    auto inv = invertAt(xp, p, 0);
    if (!inv) return std::nullopt;
    out += *inv;
  }
  // Exactness guard: both one-sided identities.
  Element proj(&alg);
  for (int p : alg.vertices())
    if (!x.component(p, p).isZero()) proj += alg.idem(p);
  if (!(x * out == proj) || !(out * x == proj)) return std::nullopt;
  return out;
}

Element invert(const Element& x) {
  auto r = tryInvert(x);
  if (!r) throw NotARecognizedUnit("element is not a recognized unit");
  return *r;
}

}  // namespace ncqh
