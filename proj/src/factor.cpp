#include "cospec/factor.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <stdexcept>
#include <string>

namespace cospec {

namespace {

constexpr std::uint32_t kTrialLimit = 1'000'000;

const std::vector<std::uint32_t>& small_primes() {
  static const std::vector<std::uint32_t> primes = [] {
    std::vector<bool> sieve(kTrialLimit + 1, true);
    std::vector<std::uint32_t> out;
    for (std::uint32_t i = 2; i <= kTrialLimit; ++i) {
      if (!sieve[i]) continue;
      out.push_back(i);
      for (std::uint64_t j = static_cast<std::uint64_t>(i) * i; j <= kTrialLimit; j += i)
        sieve[j] = false;
    }
    return out;
  }();
  return primes;
}

// Brent's cycle-finding variant of Pollard rho. Returns a nontrivial factor
// of odd composite n, or 0 once the shared budget is exhausted. The
// polynomial constant advances deterministically so runs are reproducible.
Int rho_brent(const Int& n, std::uint64_t& budget) {
  const Int one = 1;
  for (unsigned long c = 1;; ++c) {
    Int y = 2, q = 1, g = 1, x, ys;
    std::uint64_t r = 1;
    const std::uint64_t batch = 128;
    while (g == 1) {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) {
        if (budget == 0) return Int(0);
        --budget;
        y = (y * y + c) % n;
      }
      std::uint64_t k = 0;
      while (k < r && g == 1) {
        ys = y;
        const std::uint64_t steps = std::min(batch, r - k);
        for (std::uint64_t i = 0; i < steps; ++i) {
          if (budget == 0) return Int(0);
          --budget;
          y = (y * y + c) % n;
          q = q * abs(x - y) % n;
        }
        g = gcd(q, n);
        k += batch;
      }
      r *= 2;
    }
    if (g == n) {
      // The batched gcd overshot; replay one step at a time.
      do {
        ys = (ys * ys + c) % n;
        g = gcd(Int(abs(x - ys)), n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

// Splits perfect powers so rho never sees one (rho stalls on p^k).
bool extract_perfect_power(const Int& n, Int& root, unsigned& exponent) {
  if (mpz_perfect_power_p(n.get_mpz_t()) == 0) return false;
  for (unsigned e = 2; e <= mpz_sizeinbase(n.get_mpz_t(), 2); ++e) {
    Int r, rem;
    mpz_rootrem(r.get_mpz_t(), rem.get_mpz_t(), n.get_mpz_t(), e);
    if (rem == 0) {
      root = r;
      exponent = e;
      return true;
    }
  }
  return false;
}

}  // namespace

unsigned Factorization::multiplicity_of(const Int& p) const {
  for (const auto& [q, mult] : factors)
    if (q == p) return mult;
  return 0;
}

bool is_probable_prime(const Int& n) {
  return mpz_probab_prime_p(n.get_mpz_t(), 30) != 0;
}

std::uint64_t default_effort_budget() {
  if (const char* env = std::getenv("COSPEC_FACTOR_BUDGET")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
  }
  return 50'000'000;
}

Factorization factorize(const Int& v) { return factorize(v, default_effort_budget()); }

Factorization factorize(const Int& v, std::uint64_t effort_budget) {
  if (v == 0) throw std::invalid_argument("factorize: value must be nonzero");

  Factorization out;
  out.value = v;
  Int n = abs(v);
  if (n == 1) return out;

  std::map<Int, unsigned> found;
  for (const std::uint32_t p : small_primes()) {
    const std::uint64_t pp = static_cast<std::uint64_t>(p) * p;
    if (mpz_cmp_ui(n.get_mpz_t(), pp) < 0) break;
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      const unsigned mult =
          static_cast<unsigned>(mpz_remove(n.get_mpz_t(), n.get_mpz_t(), Int(p).get_mpz_t()));
      found[Int(p)] = mult;
    }
  }

  // Whatever survives trial division has no factor below 10^6.
  std::uint64_t budget = effort_budget;
  std::vector<std::pair<Int, unsigned>> pending;
  if (n > 1) pending.emplace_back(n, 1);
  while (!pending.empty()) {
    auto [c, mult] = pending.back();
    pending.pop_back();
    if (is_probable_prime(c)) {
      found[c] += mult;
      continue;
    }
    Int root;
    unsigned exponent = 0;
    if (extract_perfect_power(c, root, exponent)) {
      pending.emplace_back(root, mult * exponent);
      continue;
    }
    const Int d = rho_brent(c, budget);
    if (d == 0) {
      out.complete = false;
      for (unsigned i = 0; i < mult; ++i) out.unfactored *= c;
      // Drain the rest of the queue into the unfactored remainder.
      for (const auto& [rest, rmult] : pending) {
        if (is_probable_prime(rest)) {
          found[rest] += rmult;
        } else {
          out.complete = false;
          for (unsigned i = 0; i < rmult; ++i) out.unfactored *= rest;
        }
      }
      pending.clear();
      continue;
    }
    pending.emplace_back(d, mult);
    pending.emplace_back(Int(c / d), mult);
  }

  out.factors.assign(found.begin(), found.end());
  return out;
}

}  // namespace cospec
