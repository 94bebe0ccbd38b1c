#pragma once

#include "ncqh/structures.hpp"

namespace ncqh {

/// Phi^{-1} d Phi summed over vertices.
Element maurerCartan(const QBStructure& qb);
Element maurerCartan(const std::map<int, PhiComponent>& phi, const Algebra& alg);

/// (B1): d omega - 1/6 (Phi^{-1} d Phi)^3 vanishes modulo commutators.
CheckResult checkB1(const QBStructure& qb);

/// (B2): iota_{E_p} omega = 1/2 (Phi_p^{-1} dPhi_p + dPhi_p Phi_p^{-1}).
CheckResult checkB2(const QBStructure& qb);

/// Compatibility (7.3-32) on the basis of partial derivatives.
CheckResult checkC(const QPStructure& s, const QBStructure& qb);

/// Lemma 7.7 contraction formulas for every generator, the Lemma 7.8
/// instance evaluated on dPhi (x) 1, and the iota_E d omega computation of
/// the integrability proof.
CheckResult checkLemma77(const QPStructure& s, const QBStructure& qb);

/// Lemma 7.10: pr1 i_{H_a} iota_{H_b} (d omega - 1/6 (Phi^{-1}dPhi)^3) = 0.
CheckResult checkLemma710(const QPStructure& s, const QBStructure& qb);

/// Prop 5.4 items (2)(3)(4) on all generator pairs.
CheckResult checkProp54(const QPStructure& s);

/// The triple bracket of E^3: 3 circ(E(a)^o E(b)^o E(c)^o), as a three-leg
/// tensor. The quasi-Poisson property reads: Jacobiator = 1/12 of this.
Tensor tripleBracketE3(const Algebra& alg, const Element& a, const Element& b, const Element& c);

}  // namespace ncqh
