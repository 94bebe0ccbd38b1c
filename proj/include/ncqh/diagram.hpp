#pragma once

#include "ncqh/pairing.hpp"
#include "ncqh/structures.hpp"

namespace ncqh {

/// The maps of the compatibility diagram, materialized on the free bases.
/// AEA, AdPhiA and their duals are rank-one free bimodules on per-vertex
/// formal generators; c expands those generators into actual polyvectors and
/// forms.
struct DiagramMaps {
  const Algebra* alg = nullptr;

  BimodMap cE;       // AEA -> DA, E_p to the canonical E-word
  BimodMap cdPhi;    // AdPhiA -> OmegaA, dPhi_p to d(Phi_p)
  BimodMap eOmega;   // OmegaA -> AE*A, d(c) to c E*_{h} - E*_{t} c
  BimodMap eD;       // DA -> AdPhi*A, D(c) to dPhi/dc-sandwiches
  BimodMap iotaDPhi; // AdPhiA -> AEA, 1/2 (E Phi + Phi E)
  BimodMap iotaEA;   // AEA -> AdPhiA, 1/2 (Phi^{-1} dPhi + dPhi Phi^{-1})
  BimodMap jDPhiS;   // AdPhi*A -> AE*A, -1/2 (Phi^{-1} E* + E* Phi^{-1})
  BimodMap jES;      // AE*A -> AdPhi*A, -1/2 (Phi dPhi* + dPhi* Phi)
  BimodMap S0;       // AdPhi*A -> AEA, E Phi^{-1} - Phi^{-1} E
  BimodMap T0;       // AE*A -> AdPhiA, Phi^{-1} dPhi - dPhi Phi^{-1}
  BimodMap iP;       // OmegaA -> DA, d(c) to iota(P)(dc)
  BimodMap iOmega;   // DA -> OmegaA, D(c) to iota_{D(c)}(omega); empty if no omega

  bool hasOmega = false;

  /// S = c S0 e on degree-1 polyvectors; T = c T0 e on 1-forms.
  Element S(const Element& delta) const;
  Element T(const Element& eta) const;
};

DiagramMaps buildDiagram(const QPStructure& s);
DiagramMaps buildDiagram(const QPStructure& s, const Element& omega);

/// Lemma 7.2: (1) every square of the unrolled diagram commutes on basis
/// elements; (2) 1/4 gamma beta alpha + epsilon delta = 1 for the four
/// configurations whose vertical arrows avoid iota(P) and iota(omega).
CheckResult checkLemma72(const DiagramMaps& d);

/// Prop 7.4 equivalent identities (7.5-42)...(7.10-47) plus the Remark 7.6
/// unitarity of the tilde maps under the symmetric pairing.
CheckResult checkProp74(const DiagramMaps& d);

}  // namespace ncqh
