#pragma once

#include "ncqh/diagram.hpp"
#include "ncqh/structures.hpp"

namespace ncqh {

struct NonDegeneracyNotEstablished : AlgebraError {
  using AlgebraError::AlgebraError;
};

/// Surjectivity certificates for (P3): per arrow c an exact decomposition
/// D(c) = iota(P)(eta_c) + c(delta_c) with eta_c a 1-form and delta_c a
/// formal AEA element.
struct P3Certs {
  std::map<int, std::pair<Element, Element>> cert;
};

/// Expands a formal AEA element into the polyvector it names.
Element expandAEA(const Algebra& alg, const Element& formal);

bool verifyCerts(const QPStructure& s, const P3Certs& certs, std::string* err);

/// Builds certificates by replaying the fusion construction: disjoint basic
/// quivers glued vertex group by vertex group, transporting the explicit
/// basic-quiver pivots through each gluing (the glued vertex's E-pieces are
/// recovered from iota(P)(d Phi) with the unit pivot Phi). Returns nullopt
/// when the replayed structure does not reproduce s.
std::optional<P3Certs> buildQuiverCerts(const QPStructure& s);

/// (P3): symbolic certificate construction with exact verification; when the
/// quiver replay does not apply, callers fall back to numeric rank checks.
CheckResult checkP3(const QPStructure& s);

/// The unique omega of the compatibility theorem, solved on the basis of
/// partial derivatives from iota(omega) iota(P) = 1 - 1/4 T and
/// iota(omega) c = c iota, then assembled through the dual-basis formula.
struct OmegaDerived {
  QBStructure qb;
  BimodMap alphaMap;  // iota(omega) on the basis of partial derivatives
};

OmegaDerived omegaFromP(const QPStructure& s);  // throws NonDegeneracyNotEstablished

/// Certificates for (B3): d(c) = iota(omega)(delta_c) + c(eta_c) with eta_c
/// formal in AdPhiA. Derived from the (7.6-43) identity of a compatible pair.
struct B3Certs {
  std::map<int, std::pair<Element, Element>> cert;
};

B3Certs b3CertsFromDiagram(const DiagramMaps& d);  // throws when the identity fails

/// Inverse direction of the compatibility theorem.
QPStructure pFromOmega(const QBStructure& qb, const B3Certs& certs);

CheckResult checkB3(const QBStructure& qb, const QPStructure* compatibleP);

}  // namespace ncqh
