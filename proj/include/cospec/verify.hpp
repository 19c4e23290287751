#ifndef COSPEC_VERIFY_HPP
#define COSPEC_VERIFY_HPP

#include <string>
#include <vector>

#include "cospec/graph.hpp"
#include "cospec/linalg.hpp"
#include "cospec/mate.hpp"

namespace cospec {

/// Evidence that two graphs form a generalized cospectral pair related by a
/// regular rational orthogonal similarity. When `passed` is false,
/// `failed_check` names the first check that failed.
struct CospectralCertificate {
  std::vector<Int> charpoly_g, charpoly_h;    // adjacency spectra
  std::vector<Int> charpoly_gc, charpoly_hc;  // complement spectra
  Int q_level{0};                             // 0 when no Q was recovered
  IntMatrix q_num;                            // q_level * Q
  bool passed = false;
  std::string failed_check;
};

/// True iff the adjacency characteristic polynomials of g and h agree and so
/// do those of their complements.
bool generalized_cospectral(const Graph& g, const Graph& h);

struct RecoveredQ {
  IntMatrix q_num;  // level * Q
  Int level;        // smallest k with k*Q integral
};

/// The unique regular rational orthogonal Q with Q^T A(g) Q = A(h), recovered
/// from the walk-matrix identity Q^T W(g) = W(h) and then checked for
/// orthogonality and regularity. g must be controllable and the graphs
/// generalized cospectral, otherwise the consistency checks throw.
RecoveredQ recover_q(const Graph& g, const Graph& h);

/// Smallest positive integer k such that k*q is integral.
Int level_of(const RatMatrix& q);

/// xi(m) = c2(m) + c2(J - I - m), the sum of the two second characteristic
/// coefficients, computed from 2x2 principal minors. Every adjacency matrix
/// of order n attains the maximum -n(n-1)/2.
Int xi_invariant(const IntMatrix& m);

/// Full certification of a mate produced by the finder: cospectrality, Q
/// recovery with expected level and rank, the xi bound, walk-matrix
/// transport, and nonisomorphism.
CospectralCertificate certify_mate(const Graph& g, const MateResult& result);

/// Certify an arbitrary candidate pair. When expected_level is nonzero the
/// recovered level must match it; otherwise any level above 1 is accepted.
CospectralCertificate certify_pair(const Graph& g, const Graph& h,
                                   std::int64_t expected_level = 0);

}  // namespace cospec

#endif  // COSPEC_VERIFY_HPP
