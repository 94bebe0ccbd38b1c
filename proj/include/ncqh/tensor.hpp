#pragma once

#include <vector>

#include "ncqh/element.hpp"

namespace ncqh {

/// Element of the n-fold tensor power (over B) of the word algebra: a
/// rational combination of n-tuples of normal-form words. Legs are graded by
/// their odd-symbol count; permutations carry Koszul signs.
class Tensor {
 public:
  Tensor() = default;
  Tensor(const Algebra* a, int legs) : alg_(a), legs_(legs) {}

  const Algebra* alg() const { return alg_; }
  int legs() const { return legs_; }
  bool isZero() const { return terms_.empty(); }
  const std::map<std::vector<Word>, Rat>& terms() const { return terms_; }

  void addTerm(const std::vector<Word>& t, const Rat& c);

  Tensor& operator+=(const Tensor& o);
  Tensor& operator-=(const Tensor& o);
  friend Tensor operator+(Tensor a, const Tensor& b) { a += b; return a; }
  friend Tensor operator-(Tensor a, const Tensor& b) { a -= b; return a; }
  friend Tensor operator*(const Rat& c, Tensor t);
  Tensor operator-() const { return Rat(-1) * (*this); }
  bool operator==(const Tensor& o) const { return terms_ == o.terms_; }

  /// Multiplies leg i on the left / right by an element (renormalizing).
  Tensor mulLeg(int i, const Element& e, bool onLeft) const;

  /// Output leg i receives input leg perm^{-1}(i), with the Koszul sign of
  /// the rearrangement (perm uses 0-based positions, perm[i] = destination
  /// of input leg i).
  Tensor permuted(const std::vector<int>& perm) const;

  /// The degree-graded flip (u (x) v) -> (-1)^{|u||v|} v (x) u on two legs.
  Tensor flip() const;

  /// circ-contraction: c_1 (x) ... (x) c_n -> (-1)^{|c_n|(|c_1|+...+|c_{n-1}|)}
  /// c_n c_1 ... c_{n-1}, multiplied out.
  Element circContract() const;

  /// Keeps terms whose leg degrees match exactly.
  Tensor filterDegrees(const std::vector<int>& degs) const;

  /// Appends the legs of o (tensor product over B: adjacent endpoints are not
  /// constrained across legs).
  Tensor outer(const Tensor& o) const;

  std::string str() const;

 private:
  const Algebra* alg_ = nullptr;
  int legs_ = 0;
  std::map<std::vector<Word>, Rat> terms_;
};

Tensor tensorOf(const Element& a, const Element& b);
Tensor tensorOf(const Element& a, const Element& b, const Element& c);
Tensor tensorFromElement(const Element& a);  // single leg

}  // namespace ncqh
