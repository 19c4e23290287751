#ifndef COSPEC_MATE_HPP
#define COSPEC_MATE_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "cospec/graph.hpp"
#include "cospec/linalg.hpp"
#include "cospec/walk.hpp"

namespace cospec {

/// The unique vector congruent to a source vector mod p with every entry in
/// [-(p-1)/2, (p-1)/2]. All entries are nonzero mod p.
struct ShortestRep {
  std::int64_t p = 0;
  I64Vector u;
  /// s = (u^T e - p) / p; empty when p does not divide u^T e - p (in which
  /// case no perfect representative exists).
  std::optional<std::int64_t> sum_s;
  std::int64_t norm = 0;  // u^T u
};

/// Integer vector w with w = v (mod p), w^T e = p and w^T w = p^2.
struct PerfectRep {
  I64Vector w;
};

/// p-scaled form of a regular rational orthogonal matrix Q of level p whose
/// reduction mod p has rank 1: qhat = p*Q.
struct PrimitiveMatrix {
  std::int64_t p = 0;
  IntMatrix qhat;
};

/// Outcome of the mate search.
struct MateResult {
  enum class Verdict { Dgs, Mate };
  Verdict verdict = Verdict::Dgs;
  std::optional<Graph> mate;
  std::optional<PrimitiveMatrix> q;
  /// |R_k| for each multiplier k processed, starting at k = 1. The search
  /// stops as soon as the running total reaches the nonzero support, so the
  /// list may be shorter than p-1.
  std::vector<std::int64_t> rep_census;
  /// Kernel vector the search started from.
  ModVector kernel;
  /// False when the search exited at the v^T v gate without enumerating.
  bool enumerated = false;
};

/// Canonical nontrivial solution of W^T z = 0 (mod p), scaled so its last
/// nonzero entry equals 1. Requires a one-dimensional kernel.
ModVector kernel_vector(const WalkMatrixBundle& bundle, std::int64_t p);

/// Split v into its nonzero entries (in order) and the positions of its
/// zero entries (ascending, 0-based).
std::pair<ModVector, std::vector<int>> strip_zeros(const ModVector& v);

/// Shortest p-representative of an integer vector whose entries are all
/// nonzero mod p.
ShortestRep shortest_p_representative(const I64Vector& v, std::int64_t p);

/// All perfect p-representatives of the vector underlying u, generated from
/// the shortest representative by the bounded entry adjustments that preserve
/// w^T e = p and w^T w = p^2. Empty when |u^T e - p| > 3p or u^T u > p^2.
std::vector<PerfectRep> enumerate_perfect_reps(const ShortestRep& u);

/// Independent oracle: exhaustively tries w_i in {u_i - p, u_i, u_i + p}
/// (every perfect representative has this form) and keeps the vectors with
/// w^T e = p and w^T w = p^2. Dimension must be at most 16.
std::vector<PerfectRep> brute_force_perfect_reps(const ShortestRep& u);

/// Assemble the p-scaled matrix whose leading columns are the given
/// representatives (rows at `zero_positions` left zero) and whose trailing
/// columns are p*e_j for j in `zero_positions` ascending. All primitive-
/// matrix invariants are verified.
PrimitiveMatrix assemble_primitive(const std::vector<PerfectRep>& reps,
                                   const std::vector<int>& zero_positions, int n,
                                   std::int64_t p);

/// Check every PrimitiveMatrix invariant: qhat^T qhat = p^2 I, qhat e = p e,
/// qhat^T e = p e, rank mod p equals 1, and level exactly p. Throws
/// TheoryViolation on failure.
void validate_primitive(const PrimitiveMatrix& q);

/// Decide whether g (a family member per cls) has a generalized cospectral
/// mate, and construct it when it does. With sanity_mode the multiplier loop
/// never exits early, so the representative count bound is checked across
/// all k.
MateResult find_mate(const Graph& g, const FamilyClassification& cls,
                     bool sanity_mode = false);

/// Same search started from an explicit kernel solution; rescaling v by any
/// c with c != 0 (mod p) changes the outcome only up to isomorphism.
MateResult find_mate_from_kernel(const Graph& g, const ModVector& v,
                                 bool sanity_mode = false);

}  // namespace cospec

#endif  // COSPEC_MATE_HPP
