#ifndef COSPEC_FACTOR_HPP
#define COSPEC_FACTOR_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "cospec/numeric.hpp"

namespace cospec {

/// Factorization of a nonzero integer. When complete, the product of
/// prime^multiplicity equals |value|; otherwise `unfactored` holds the
/// composite cofactor the effort budget could not split.
struct Factorization {
  Int value;
  std::vector<std::pair<Int, unsigned>> factors;  // primes ascending
  bool complete = true;
  Int unfactored{1};

  /// Multiplicity of p in the factored part (0 if absent).
  unsigned multiplicity_of(const Int& p) const;
};

/// Baillie/Miller-Rabin style probabilistic primality test (error < 4^-30).
bool is_probable_prime(const Int& n);

/// Effort budget (rho iterations) read from COSPEC_FACTOR_BUDGET, with a
/// built-in default.
std::uint64_t default_effort_budget();

/// Factor v: trial division by all primes below 10^6, then Brent's rho with
/// primality certification of every emitted factor. A deterministic method
/// sequence keeps results reproducible. v must be nonzero.
Factorization factorize(const Int& v);
Factorization factorize(const Int& v, std::uint64_t effort_budget);

}  // namespace cospec

#endif  // COSPEC_FACTOR_HPP
