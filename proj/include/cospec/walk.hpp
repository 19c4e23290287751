#ifndef COSPEC_WALK_HPP
#define COSPEC_WALK_HPP

#include <cstdint>
#include <string>

#include "cospec/factor.hpp"
#include "cospec/graph.hpp"
#include "cospec/linalg.hpp"

namespace cospec {

/// Walk matrix [e, Ae, ..., A^{n-1}e] with its exact determinant and Smith
/// normal form.
struct WalkMatrixBundle {
  IntMatrix w;
  Int det;
  SnfDecomposition snf;
};

WalkMatrixBundle build_walk_matrix(const Graph& g);

enum class FamilyVerdict {
  NotControllable,   // det W = 0
  OddSquareFreeDgs,  // odd part of det W square-free: determined by spectrum pair
  FamilyMember,      // walk-matrix SNF is diag(1..1, 2..2, 2p^2 b)
  Other,             // controllable but outside both shapes
  Unclassifiable,    // factorization effort budget exhausted
};

std::string to_string(FamilyVerdict v);

struct FamilyClassification {
  FamilyVerdict verdict = FamilyVerdict::Other;
  std::int64_t p = 0;  // odd prime, FamilyMember only
  Int b;               // odd square-free cofactor with p not dividing b, FamilyMember only
  SnfDecomposition snf;
  /// Factorization of the odd part of |det W| (partial when Unclassifiable).
  Factorization det_odd_factors;
};

/// Classify a graph by the arithmetic of its walk matrix. The SNF-shape test
/// and the equivalent determinant/rank test are both evaluated and must
/// agree; disagreement raises TheoryViolation.
FamilyClassification classify(const Graph& g);
FamilyClassification classify(const Graph& g, const WalkMatrixBundle& bundle);

}  // namespace cospec

#endif  // COSPEC_WALK_HPP
