#pragma once

#include <map>

#include "ncqh/tensor.hpp"

namespace ncqh {

/// The free bimodules of the structure diagram, each of rank one over its
/// generator family (arrow differentials, partial derivatives, or the formal
/// per-vertex generators).
enum class FreeMod { OmegaA, DA, AEA, AdPhiA, AEStarA, AdPhiStarA };

SymKind genKind(FreeMod m);
FreeMod dualMod(FreeMod m);
bool vertexIndexed(FreeMod m);

/// Basis generator indices of a module: arrow ids or vertex labels.
std::vector<int> basisIndices(const Algebra& alg, FreeMod m);
Element basisElement(const Algebra& alg, FreeMod m, int idx);

/// A bimodule morphism between free modules, stored by generator images.
struct BimodMap {
  const Algebra* alg = nullptr;
  FreeMod src = FreeMod::OmegaA, dst = FreeMod::OmegaA;
  std::map<int, Element> img;

  Element apply(const Element& x) const;
};

/// Evaluation pairing between degree-1 elements of dual free modules
/// (inner-linear in the first argument, outer-linear in the second):
/// <u gen_i v, x gen'_j y> = delta_ij (x v) (x) (u y). The same formula
/// realizes the opposite pairing when the arguments are exchanged.
Tensor pairEval(const Element& a, const Element& b);

/// Antisymmetry test: <p, alpha(p')> = -<p', alpha(p)>^flip on basis pairs.
bool isAntisymmetric(const BimodMap& alpha);

/// Inverse of iota under the (DA, OmegaA)-style pairing:
/// omega = -1/2 sum_i alpha(p_i) q_i for the dual bases p_i, q_i.
Element omegaFromMap(const BimodMap& alpha);

/// Adjoint of alpha: beta(q') = sum_i <alpha(p_i), q'>' q_i <alpha(p_i), q'>''.
/// srcPairDual: the module paired with alpha.src whose basis drives the sum.
BimodMap adjointOf(const BimodMap& alpha);

/// Zero tests through the dual bases {D(c)}, {d(c)}, with their
/// reconstruction identities enforced: sum_c d(c) iota_{D(c)}(omega) = n omega
/// mod commutators, and (pr1 i_{D(c)} eta)' d(c) (pr1 i_{D(c)} eta)'' = eta.
bool iotaAllZero(const Element& omegaClassRep);
bool pr1AllZero(const Element& eta);

}  // namespace ncqh
