#pragma once

#include "ncqh/structures.hpp"

namespace ncqh {

/// The double bracket on T_A(Omega_A + AEA) of the algebroid theorem.
/// Words mix algebra symbols, d-symbols and the formal E generators;
/// generator rules:
///   {{d a, b}}   = {{a, b}}_P
///   {{d a, d b}} = d{{a,b}}_P + 1/4 [b, [a, E (x) 1 - 1 (x) E]_*]
///   {{E_p, X}}   = X e_p (x) e_p - e_p (x) e_p X
/// extended by the graded Leibniz rule and graded antisymmetry.
class TildeBracket {
 public:
  explicit TildeBracket(const QPStructure& s) : s_(&s) {}

  Tensor operator()(const Element& X, const Element& Y) const;

 private:
  Tensor words(const Word& wx, const Word& wy) const;
  Tensor base(Sym sx, Sym sy) const;

  const QPStructure* s_;
};

/// Machine proof of the algebroid theorem on a structure: the double Jacobi
/// identity on every generator triple from {d c} and {E_p}, and the anchor
/// map (d a -> H_a, E_p -> E_p) respecting brackets on generator pairs.
CheckResult checkTheorem53(const QPStructure& s);

/// The anchor morphism applied to a tilde element.
Element tildeAnchor(const QPStructure& s, const Element& x);

}  // namespace ncqh
