#include "cospec/walk.hpp"

#include <stdexcept>

namespace cospec {

namespace {

// 2-adic valuation of nonzero v.
unsigned long valuation2(const Int& v) {
  return mpz_scan1(v.get_mpz_t(), 0);
}

// d matches diag(1,...,1, 2,...,2, 2p^2 b) with ceil(n/2) ones.
bool snf_has_family_shape(const IntVector& d, const Int& p, const Int& b) {
  const Eigen::Index n = d.size();
  const Eigen::Index ones = (n + 1) / 2;
  for (Eigen::Index i = 0; i < ones; ++i)
    if (d(i) != 1) return false;
  for (Eigen::Index i = ones; i + 1 < n; ++i)
    if (d(i) != 2) return false;
  return n >= 1 && d(n - 1) == 2 * p * p * b;
}

}  // namespace

WalkMatrixBundle build_walk_matrix(const Graph& g) {
  const int n = g.order();
  const IntMatrix a = g.adjacency_matrix();
  WalkMatrixBundle bundle;
  bundle.w.resize(n, n);
  IntVector col = IntVector::Ones(n);
  for (int k = 0; k < n; ++k) {
    bundle.w.col(k) = col;
    if (k + 1 < n) col = a * col;
  }
  bundle.det = det_bareiss(bundle.w);
  bundle.snf = smith_normal_form(bundle.w);

  Int prod = 1;
  for (Eigen::Index i = 0; i < bundle.snf.d.size(); ++i) prod *= bundle.snf.d(i);
  if (prod != abs(bundle.det))
    throw TheoryViolation("build_walk_matrix: invariant factor product != |det|");
  return bundle;
}

std::string to_string(FamilyVerdict v) {
  switch (v) {
    case FamilyVerdict::NotControllable: return "not_controllable";
    case FamilyVerdict::OddSquareFreeDgs: return "odd_square_free_dgs";
    case FamilyVerdict::FamilyMember: return "family_fn";
    case FamilyVerdict::Other: return "other";
    case FamilyVerdict::Unclassifiable: return "unclassifiable";
  }
  return "unknown";
}

FamilyClassification classify(const Graph& g) {
  return classify(g, build_walk_matrix(g));
}

FamilyClassification classify(const Graph& g, const WalkMatrixBundle& bundle) {
  const int n = g.order();
  FamilyClassification cls;
  cls.snf = bundle.snf;

  if (bundle.det == 0) {
    cls.verdict = FamilyVerdict::NotControllable;
    return cls;
  }

  const unsigned long half = static_cast<unsigned long>(n / 2);
  const unsigned long v2 = valuation2(bundle.det);
  if (v2 < half)
    throw TheoryViolation("classify: 2-adic valuation of det W below n/2");
  if (v2 != half) {
    cls.verdict = FamilyVerdict::Other;
    return cls;
  }

  Int odd = abs(bundle.det) >> v2;
  cls.det_odd_factors = factorize(odd);
  if (!cls.det_odd_factors.complete) {
    cls.verdict = FamilyVerdict::Unclassifiable;
    return cls;
  }

  // Exact square-free odd part: determined by the generalized spectrum.
  bool square_free = true;
  Int squared_prime = 0;
  int squared_count = 0;
  bool high_multiplicity = false;
  for (const auto& [prime, mult] : cls.det_odd_factors.factors) {
    if (mult >= 2) square_free = false;
    if (mult == 2) {
      squared_prime = prime;
      ++squared_count;
    }
    if (mult >= 3) high_multiplicity = true;
  }
  if (square_free) {
    cls.verdict = FamilyVerdict::OddSquareFreeDgs;
    return cls;
  }
  if (high_multiplicity || squared_count != 1) {
    cls.verdict = FamilyVerdict::Other;
    return cls;
  }

  // Candidate family member: odd part is p^2 b with b odd square-free and
  // not divisible by p.
  if (squared_prime >= (Int(1) << 31))
    throw std::domain_error("classify: squared prime exceeds supported modulus range");
  const std::int64_t p = static_cast<std::int64_t>(squared_prime.get_si());
  Int b = odd / (squared_prime * squared_prime);

  const bool det_rank_test = rank_mod_p(bundle.w, p) == n - 1;
  const bool snf_shape_test = snf_has_family_shape(bundle.snf.d, squared_prime, b);
  if (det_rank_test != snf_shape_test)
    throw TheoryViolation("classify: SNF-shape test disagrees with det/rank test");

  if (!det_rank_test) {
    cls.verdict = FamilyVerdict::Other;
    return cls;
  }

  if (rank_mod_p(bundle.w, 2) != (n + 1) / 2)
    throw TheoryViolation("classify: 2-rank of family walk matrix is not ceil(n/2)");

  cls.verdict = FamilyVerdict::FamilyMember;
  cls.p = p;
  cls.b = b;
  return cls;
}

}  // namespace cospec
