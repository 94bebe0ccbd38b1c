#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include "ncqh/quiver.hpp"
#include "ncqh/rational.hpp"
#include "ncqh/symbol.hpp"

namespace ncqh {

class Algebra;

struct AlgebraError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Exact-rational linear combination of normal-form composable words. The
/// same container carries algebra elements, differential forms, polyvector
/// fields and formal-generator words; the alphabet decides which.
class Element {
 public:
  Element() = default;
  explicit Element(const Algebra* a) : alg_(a) {}

  const Algebra* alg() const { return alg_; }
  const std::map<Word, Rat>& terms() const { return terms_; }
  bool isZero() const { return terms_.empty(); }
  std::size_t termCount() const { return terms_.size(); }

  /// Adds coef * w, erasing the entry if the sum cancels. The word must
  /// already be in normal form.
  void addTerm(const Word& w, const Rat& coef);

  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  friend Element operator+(Element a, const Element& b) { a += b; return a; }
  friend Element operator-(Element a, const Element& b) { a -= b; return a; }
  friend Element operator*(const Rat& c, Element e);
  Element operator-() const;
  friend Element operator*(const Element& a, const Element& b);
  bool operator==(const Element& o) const { return terms_ == o.terms_; }

  /// Total degree if homogeneous, throws otherwise; 0 for the zero element.
  int degree() const;
  bool isHomogeneous() const;

  /// Component e_p * x * e_q.
  Element component(int p, int q) const;

  std::string str() const;

 private:
  friend class Algebra;
  const Algebra* alg_ = nullptr;
  std::map<Word, Rat> terms_;
};

/// The localized path algebra of a double quiver over B = sum of k e_p, with
/// g_c = (e + c c*)^{-1} adjoined for every arrow c, together with the word
/// machinery shared by forms and polyvector fields. Immutable after
/// construction; the rewrite caches are internally synchronized.
class Algebra {
 public:
  explicit Algebra(DoubleQuiver dq);
  Algebra(const Algebra&) = delete;
  Algebra& operator=(const Algebra&) = delete;

  const DoubleQuiver& dquiver() const { return dq_; }
  int arrowCount() const { return dq_.arrowCount(); }
  const std::vector<int>& vertices() const { return dq_.base.vertices; }

  int tailOf(Sym s) const;
  int headOf(Sym s) const;
  int tailOf(const Word& w) const { return tailOf(w.syms.front()); }
  int headOf(const Word& w) const { return headOf(w.syms.back()); }
  bool composable(const Word& w) const;
  bool closed(const Word& w) const { return !w.syms.empty() && tailOf(w) == headOf(w); }

  /// Rewrites a raw word to normal form. Rules: non-composable words vanish,
  /// idempotents are absorbed, c c* g_c -> e - g_c, g_c c -> c g_{c*}.
  Element normalWord(const Word& raw) const;

  // Generator elements.
  Element zero() const { return Element(this); }
  Element fromWord(const Word& w) const { return normalWord(w); }
  Element sym(Sym s) const;
  Element idem(int p) const { return sym({SymKind::Idem, p}); }
  Element arrow(int id) const { return sym({SymKind::Arrow, id}); }
  Element inv(int id) const { return sym({SymKind::Inv, id}); }
  Element diff(int id) const { return sym({SymKind::Diff, id}); }
  Element partial(int id) const { return sym({SymKind::Partial, id}); }
  Element genE(int p) const { return sym({SymKind::GenE, p}); }
  Element genEStar(int p) const { return sym({SymKind::GenEStar, p}); }
  Element genDPhi(int p) const { return sym({SymKind::GenDPhi, p}); }
  Element genDPhiStar(int p) const { return sym({SymKind::GenDPhiStar, p}); }
  /// Sum of all vertex idempotents (the unit of A).
  Element unit() const;

  /// 1 + c c* at the tail vertex of c.
  Element onePlus(int arrowId) const;

  int arrowIdByName(const std::string& name) const;  // -1 when absent

  /// Canonical representative of the class of x modulo graded commutators:
  /// non-closed words vanish; closed words reduce to the sign-adjusted
  /// minimal rotation, reducing across the seam first when a rotation
  /// exposes a redex.
  Element cyclicReduce(const Element& x) const;

  std::string printWord(const Word& w) const;
  std::string printSym(Sym s) const;

 private:
  Element normalizeBranches(const Word& filtered) const;
  Element cyclicWord(const Word& w) const;

  DoubleQuiver dq_;
  mutable std::mutex mu_;
  mutable std::map<Word, std::map<Word, Rat>> nfCache_;
  mutable std::map<Word, std::map<Word, Rat>> cycCache_;
};

/// Transfers an element to an algebra whose quiver arose from this one by
/// vertex gluing (same arrows, relabeled vertices).
Element relabel(const Element& x, const Algebra& target, const std::map<int, int>& vertexMap);

}  // namespace ncqh
