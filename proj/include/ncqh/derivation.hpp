#pragma once

#include <vector>

#include "ncqh/tensor.hpp"

namespace ncqh {

/// Double derivation A -> A (x) A for the outer bimodule structure, stored by
/// its coordinates on the free basis of partial derivativesd. Values on
/// idempotents are zero and values on the adjoined inverses are forced by the
/// derivation rule.
class DDeriv {
 public:
  explicit DDeriv(const Algebra* a);

  const Algebra* alg() const { return alg_; }
  const Tensor& coord(int arrowId) const { return coords_[arrowId]; }
  Tensor& coord(int arrowId) { return coords_[arrowId]; }

  bool operator==(const DDeriv& o) const { return coords_ == o.coords_; }

  DDeriv& operator+=(const DDeriv& o);
  friend DDeriv operator+(DDeriv a, const DDeriv& b) { a += b; return a; }
  friend DDeriv operator*(const Rat& c, DDeriv d);
  DDeriv operator-() const { return Rat(-1) * (*this); }

 private:
  const Algebra* alg_;
  std::vector<Tensor> coords_;
};

/// Leibniz extension of the coordinates; delta(g_c) = -g_c delta(c c*) g_c.
Tensor applyD(const DDeriv& d, const Element& x);

/// The coordinate derivation along arrow c.
DDeriv partialD(const Algebra& alg, int arrowId);

/// E_p(c) = c e_p (x) e_p - e_p (x) e_p c.
DDeriv canonicalE(const Algebra& alg, int vertex);
DDeriv canonicalETotal(const Algebra& alg);

/// Word form of a double derivation: sum of v D(c) u over coordinate terms
/// u (x) v of delta(c).
Element wordForm(const DDeriv& d);

/// Inverse of wordForm for degree-1 polyvector elements.
DDeriv derivFromElement(const Element& x);

/// E_p as a polyvector word element (cached per algebra would be overkill;
/// the expansion is tiny).
Element eWordAt(const Algebra& alg, int vertex);
Element eWordTotal(const Algebra& alg);

}  // namespace ncqh
