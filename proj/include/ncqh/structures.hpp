#pragma once

#include <memory>
#include <optional>

#include "ncqh/invert.hpp"
#include "ncqh/schouten.hpp"

namespace ncqh {

/// One vertex component of the multiplicative moment map: an ordered product
/// of factors (e + c c*)^{+-1}, kept both as the factor list and expanded.
struct PhiComponent {
  int vertex = 0;
  std::vector<std::pair<int, int>> factors;  // (arrow id, exponent +-1)
  Element elem, inv;
};

PhiComponent phiComponentFor(const Algebra& alg, int vertex,
                             const std::vector<std::pair<int, int>>& factors);

/// Double quasi-Poisson structure data: degree-2 representative P and the
/// vertex-indexed moment map.
struct QPStructure {
  const Algebra* alg = nullptr;
  Element P;
  std::map<int, PhiComponent> phi;

  const PBracket& bracket() const;
  Element phiElem() const;
  Element phiInvElem() const;

 private:
  mutable std::shared_ptr<PBracket> bracket_;
};

/// Quasi-bisymplectic structure data: a degree-2 form representative (its
/// class is what the axioms constrain) and the moment map.
struct QBStructure {
  const Algebra* alg = nullptr;
  Element omega;
  std::map<int, PhiComponent> phi;
};

/// The structure of the paper's quiver theorem: P is the ordered double sum
/// over the double quiver and Phi the ordered product of (1 + c c*)^{eps(c)}.
QPStructure quiverQP(const Algebra& alg);

/// Fusion of a structure along two vertices. Owns the glued algebra.
struct FusedQP {
  std::shared_ptr<Algebra> alg;
  QPStructure s;
  VertexGluing gluing;
  int kept = 0;
  Element Ev, Ew;  // the two E-pieces of the glued vertex, in the new algebra
};

FusedQP fuseStructure(const QPStructure& s, int v, int w);

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string mode = "symbolic";
  std::string residual;
  std::vector<std::string> details;

  static CheckResult ok(std::string n, std::string m = "symbolic");
  static CheckResult fail(std::string n, std::string res, std::string m = "symbolic");
};

/// {P,P} in the squared (self-bracket) convention: half the bilinear value.
Element selfBracketClass(const Element& P);

/// (P1): {P,P} - 1/12 E^3 vanishes modulo commutators.
CheckResult checkP1(const QPStructure& s);

/// (P2): the Hamiltonian derivation of each Phi_p equals
/// 1/2 (Phi_p E_p + E_p Phi_p), coordinate-wise.
CheckResult checkP2(const QPStructure& s);

/// iota(P)(eta) = iota_eta(P) through contraction; basis images cached by
/// callers that need the bimodule-map view.
Element iotaP(const QPStructure& s, const Element& eta);

/// d Phi_p as an element of Omega^1.
Element dPhi(const QPStructure& s, int vertex);

}  // namespace ncqh
