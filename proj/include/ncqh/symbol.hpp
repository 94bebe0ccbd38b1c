#pragma once

#include <compare>
#include <cstdint>
#include <vector>

namespace ncqh {

/// Alphabet of the engine. Algebra generators (Idem, Arrow, Inv), calculus
/// symbols (Diff = d c, Partial = the partial derivative along c) and the
/// formal rank-one bimodule generators used by the structure diagram.
enum class SymKind : std::uint8_t {
  Idem,         // e_p              idx = vertex label
  Arrow,        // c                idx = double-quiver arrow id
  Inv,          // g_c              idx = arrow id
  Diff,         // d(c)             idx = arrow id
  Partial,      // D(c)             idx = arrow id
  GenE,         // E_p formal       idx = vertex label
  GenEStar,     // E*_p formal      idx = vertex label
  GenDPhi,      // dPhi_p formal    idx = vertex label
  GenDPhiStar,  // dPhi*_p formal   idx = vertex label
};

struct Sym {
  SymKind kind;
  std::int32_t idx;

  bool operator==(const Sym&) const = default;
};

inline bool symOdd(Sym s) { return s.kind >= SymKind::Diff; }

/// Canonical symbol order: e < arrows (quiver order) < stars < g's < d's <
/// partials < formal generators. Arrow ids interleave base/star, so star-ness
/// is the id parity.
inline int symRankMajor(Sym s) {
  int star = (s.kind == SymKind::Idem || s.kind >= SymKind::GenE) ? 0 : (s.idx & 1);
  switch (s.kind) {
    case SymKind::Idem: return 0;
    case SymKind::Arrow: return 1 + star;
    case SymKind::Inv: return 3 + star;
    case SymKind::Diff: return 5 + star;
    case SymKind::Partial: return 7 + star;
    case SymKind::GenE: return 9;
    case SymKind::GenEStar: return 10;
    case SymKind::GenDPhi: return 11;
    case SymKind::GenDPhiStar: return 12;
  }
  return 13;
}

inline int symRankMinor(Sym s) {
  if (s.kind == SymKind::Idem || s.kind >= SymKind::GenE) return s.idx;
  return s.idx >> 1;  // base arrow index
}

inline bool symLess(Sym a, Sym b) {
  int ma = symRankMajor(a), mb = symRankMajor(b);
  if (ma != mb) return ma < mb;
  return symRankMinor(a) < symRankMinor(b);
}

/// A word over the alphabet. Empty paths are represented as a single Idem
/// symbol; normal-form algebra words carry no other idempotents.
struct Word {
  std::vector<Sym> syms;

  Word() = default;
  explicit Word(std::vector<Sym> s) : syms(std::move(s)) {}

  std::size_t size() const { return syms.size(); }
  bool operator==(const Word&) const = default;

  int degree() const {
    int d = 0;
    for (Sym s : syms) d += symOdd(s) ? 1 : 0;
    return d;
  }
};

/// Graded-lex order: by length, then by the canonical symbol order.
inline bool operator<(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a.syms[i] == b.syms[i]) continue;
    return symLess(a.syms[i], b.syms[i]);
  }
  return false;
}

inline Word concat(const Word& a, const Word& b) {
  Word w = a;
  w.syms.insert(w.syms.end(), b.syms.begin(), b.syms.end());
  return w;
}

}  // namespace ncqh
