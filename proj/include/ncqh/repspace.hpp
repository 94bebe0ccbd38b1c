#pragma once

#include <Eigen/Dense>

#include <map>
#include <optional>
#include <vector>

#include "ncqh/element.hpp"
#include "ncqh/rng.hpp"
#include "ncqh/schouten.hpp"
#include "ncqh/tensor.hpp"

namespace Eigen {
template <>
struct NumTraits<ncqh::Rat> : GenericNumTraits<ncqh::Rat> {
  typedef ncqh::Rat Real;
  typedef ncqh::Rat NonInteger;
  typedef ncqh::Rat Nested;
  static inline ncqh::Rat epsilon() { return ncqh::Rat(0); }
  static inline ncqh::Rat dummy_precision() { return ncqh::Rat(0); }
  static inline int digits10() { return 0; }
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 40,
    MulCost = 40
  };
};
}  // namespace Eigen

namespace ncqh {

using RMat = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;

struct DimensionVector {
  std::map<int, int> alpha;  // vertex label -> block size >= 1

  int at(int p) const { return alpha.at(p); }
  void validate(const Algebra& alg) const;
};

/// A point of Rep(A, alpha): one exact-rational matrix per arrow of the
/// double quiver, with every I + X(c) X(c*) invertible (cached inverses).
struct MatrixPoint {
  const Algebra* alg = nullptr;
  DimensionVector alpha;
  std::vector<RMat> X;     // per arrow id, alpha(t) x alpha(h)
  std::vector<RMat> Ginv;  // per arrow id, inverse of I + X(c) X(c*)
  int retries = 0;         // rejected draws before this point
};

/// Per-arrow tangent (or, transposed shapes, cotangent) assignment.
using Tangent = std::vector<RMat>;

/// Deterministic seeded point with small rational entries; redraws until all
/// localization matrices are invertible. Throws after too many rejections.
MatrixPoint randomPoint(const Algebra& alg, const DimensionVector& alpha, std::uint64_t seed);

/// Builds a point from given matrices; throws when some I + X X* is singular.
MatrixPoint makePoint(const Algebra& alg, const DimensionVector& alpha, std::vector<RMat> X);

RMat evalWord(const MatrixPoint& pt, const Word& w);
/// Sum of the terms of x supported on component (p, q).
RMat evalElement(const MatrixPoint& pt, const Element& x, int p, int q);
/// Trace of the evaluation of a B-diagonal element (sums over vertices).
Rat evalTrace(const MatrixPoint& pt, const Element& x);

/// Multilinear evaluation of a mixed word: d-symbols consume the tangents in
/// word order (no antisymmetrization).
RMat evalFormWordMultilinear(const MatrixPoint& pt, const Word& w, const std::vector<Tangent>& ts);

/// tr evaluation of a form on tangents: antisymmetrized over all assignments
/// of tangents to d-slots with the permutation sign.
Rat evalFormTrace(const MatrixPoint& pt, const Element& form, const std::vector<Tangent>& ts);

/// tr evaluation of a polyvector on cotangents (partial symbols consume
/// cotangent matrices of transposed shape), antisymmetrized.
Rat evalPolyTrace(const MatrixPoint& pt, const Element& poly, const std::vector<Tangent>& cots);

/// Exact directional derivative of the evaluation of a degree-0 word along a
/// tangent, through dual-number arithmetic.
RMat dualDerivativeWord(const MatrixPoint& pt, const Word& w, const Tangent& t);
/// Dual-number directional derivative of an arbitrary scalar functional of
/// the point: derivative of evalTrace(x) along t.
Rat dualDerivativeTrace(const MatrixPoint& pt, const Element& x, const Tangent& t);

/// Derivative of evalElement(x, p, q) along t (entry-wise dual numbers).
RMat dualDerivativeElement(const MatrixPoint& pt, const Element& x, int p, int q, const Tangent& t);

/// Tangent basis enumeration: arrow-major, then row-major within each block.
std::vector<Tangent> tangentBasis(const MatrixPoint& pt);
int tangentDim(const MatrixPoint& pt);
Tangent zeroTangent(const MatrixPoint& pt);
Tangent zeroCotangent(const MatrixPoint& pt);

/// The matrix-valued vector field of the (i,j)-entry of a double derivation
/// at pt: its value on the arrow-c coordinate block, by the standard index
/// convention delta_ij(x_uv) = delta(c)'_{uj} delta(c)''_{iv}.
Tangent entryField(const MatrixPoint& pt, const DDeriv& d, int i, int j);

/// {a_ij, b_uv} for the double bracket beta: beta(a,b)'_{uj} beta(a,b)''_{iv}.
Rat entryBracket(const MatrixPoint& pt, const Tensor& bethe, int i, int j, int u, int v);

}  // namespace ncqh
