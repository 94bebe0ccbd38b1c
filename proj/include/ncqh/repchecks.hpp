#pragma once

#include "ncqh/repspace.hpp"
#include "ncqh/structures.hpp"

namespace ncqh {

/// Prop 2.3.1: the entry fields of E_p coincide with the elementary-matrix
/// conjugation action (the (i,j) entry acts as f_{ji}).
CheckResult glActionCheck(const QPStructure& s, const MatrixPoint& pt);

/// Theorem 4.2 compatibility (4.3-28) at a point, on the tangent basis:
/// tr(P) o tr(omega) = 1 - 1/4 f^a (x) Phi^*(theta_a - thetaBar_a), exactly.
CheckResult momentCheck(const QPStructure& s, const QBStructure& qb, const MatrixPoint& pt);

/// Exact rank of the non-degeneracy map at a point.
struct RankReport {
  bool fullRank = false;
  int rank = 0;
  int expected = 0;
};
RankReport rankNondegeneracyP3(const QPStructure& s, const MatrixPoint& pt);
RankReport rankNondegeneracyB3(const QPStructure& s, const QBStructure& qb, const MatrixPoint& pt);

/// Quasi-Jacobi: the Jacobiator of entry-function brackets equals the
/// 1/12 E^3 triple-bracket shadow, exactly, on all entry triples of the
/// given generator triple.
CheckResult numericJacobi(const QPStructure& s, const MatrixPoint& pt, int arrowA, int arrowB,
                          int arrowC);

/// Lemma 3.3.6: contraction of the evaluated two-form against an evaluated
/// double-derivation tangent equals the evaluation of the symbolic
/// contraction.
CheckResult lemma336Check(const QBStructure& qb, const DDeriv& p, const MatrixPoint& pt);

}  // namespace ncqh
