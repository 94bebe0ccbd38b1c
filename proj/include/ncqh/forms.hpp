#pragma once

#include "ncqh/derivation.hpp"

namespace ncqh {

/// Exterior derivative on mixed words: d(c) = d-symbol, d(e_p) = 0, d of a
/// d-symbol is 0, and d(g_c) = -g_c (d(c) c* + c d(c*)) g_c so that the
/// relative differentials stay free on the arrow differentials.
Element d(const Element& x);

/// i_delta: degree -1 double derivation of Omega A; i_delta(a) = 0 on
/// algebra symbols, i_delta(d c) = delta(c).
Tensor iContractForm(const DDeriv& delta, const Element& form);

/// iota_delta = circ of i_delta; defined on classes through representatives.
Element iotaForm(const DDeriv& delta, const Element& form);

/// L_delta = d i_delta + i_delta d (two-leg output; d acts leg-wise).
Tensor lieL(const DDeriv& delta, const Element& form);

/// script-L: circ of L_delta.
Element scriptL(const DDeriv& delta, const Element& form);

/// Contraction of polyvector fields by a 1-form (the opposite pairing):
/// i_eta(D(c)) picks the d(c)-terms of eta.
Tensor iContractPoly(const Element& eta, const Element& poly);
Element iotaPoly(const Element& eta, const Element& poly);

/// d applied leg-wise to a tensor: d(u (x) v) = du (x) v + (-1)^{|u|} u (x) dv.
Tensor dLegwise(const Tensor& t);

/// Projection of a two-leg tensor onto the terms whose first leg has degree 0.
Tensor pr1(const Tensor& t);

}  // namespace ncqh
