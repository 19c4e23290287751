#ifndef COSPEC_LINALG_HPP
#define COSPEC_LINALG_HPP

#include <cstdint>
#include <vector>

#include "cospec/numeric.hpp"

namespace cospec {

/// Result of smith_normal_form: invariant factors d with d(i) | d(i+1)
/// (zeros trailing), and optional unimodular transforms with
/// u * m * v = d.asDiagonal().
struct SnfDecomposition {
  IntVector d;
  IntMatrix u;
  IntMatrix v;
  bool has_transforms = false;
};

/// Vector of residues modulo an odd prime p, entries in [0, p-1].
struct ModVector {
  std::int64_t p = 0;
  I64Vector entries;
};

/// Exact determinant by fraction-free elimination. Intermediate values stay
/// integral; every internal division is exact.
Int det_bareiss(const IntMatrix& m);

/// Smith normal form by gcd-driven row/column reduction, pivoting on the
/// minimal nonzero absolute value. Invariant factors are nonnegative and
/// form a divisibility chain.
SnfDecomposition smith_normal_form(const IntMatrix& m, bool want_transforms = false);

/// Rank of m over Z/pZ. p must be a prime below 2^31.
std::int64_t rank_mod_p(const IntMatrix& m, std::int64_t p);

/// Basis of the right kernel of m over Z/pZ for odd prime p. Each basis
/// vector is scaled so its first nonzero entry equals 1.
std::vector<ModVector> nullspace_mod_p(const IntMatrix& m, std::int64_t p);

/// Coefficients of det(xI - m) in ascending degree order; the list has
/// length order+1 and leading coefficient 1. Uses the exact-division trace
/// recurrence; every division is asserted exact.
std::vector<Int> char_poly(const IntMatrix& m);

/// (a * b) mod p without overflow, p < 2^62.
std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t p);

/// Inverse of a modulo prime p, a not divisible by p.
std::int64_t invmod(std::int64_t a, std::int64_t p);

/// Nonnegative residue of x modulo p.
std::int64_t residue_mod(const Int& x, std::int64_t p);

}  // namespace cospec

#endif  // COSPEC_LINALG_HPP
