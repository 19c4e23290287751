#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "cospec/walk.hpp"
#include "fixtures.hpp"

using namespace cospec;
using namespace cospec::testfix;

namespace {

const Int kExample1Dn = Int(2) * 25 * 11 * 41 * 28573 * Int(260723) * Int("71447889577");
const Int kExample2Dn = Int(2) * 25 * 7 * 63689 * Int(3118319) * Int("2740960403");

}  // namespace

TEST_CASE("walk matrix columns are the iterated degree sums") {
  std::mt19937_64 rng(2024);
  for (int round = 0; round < 20; ++round) {
    const int n = 1 + static_cast<int>(rng() % 10);
    const Graph g = random_graph(n, rng());
    const auto bundle = build_walk_matrix(g);
    const IntMatrix a = g.adjacency_matrix();
    IntVector col = IntVector::Ones(n);
    for (int k = 0; k < n; ++k) {
      for (int i = 0; i < n; ++i) CHECK(bundle.w(i, k) == col(i));
      col = a * col;
    }
  }
}

TEST_CASE("regular graphs are never controllable") {
  for (int n = 2; n <= 8; ++n) {
    CHECK(build_walk_matrix(complete_graph(n)).det == 0);
    Graph cycle(n > 2 ? n : 3);
    for (int i = 0; i < cycle.order(); ++i) cycle.set_edge(i, (i + 1) % cycle.order());
    CHECK(build_walk_matrix(cycle).det == 0);
  }
}

TEST_CASE("4-path walk matrix rows and determinant") {
  const auto bundle = build_walk_matrix(path_graph(4));
  const long expected[4][4] = {
      {1, 1, 2, 3}, {1, 2, 3, 5}, {1, 2, 3, 5}, {1, 1, 2, 3}};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) CHECK(bundle.w(i, j) == expected[i][j]);
  CHECK(bundle.det == 0);
}

TEST_CASE("example 1: last invariant factor and family membership") {
  const Graph g = example1_graph();
  const auto bundle = build_walk_matrix(g);

  REQUIRE(bundle.snf.d.size() == 16);
  CHECK(bundle.snf.d(15) == kExample1Dn);
  for (int i = 0; i < 8; ++i) CHECK(bundle.snf.d(i) == 1);
  for (int i = 8; i < 15; ++i) CHECK(bundle.snf.d(i) == 2);

  CHECK(rank_mod_p(IntMatrix(bundle.w.transpose()), 5) == 15);

  const auto kernel = nullspace_mod_p(IntMatrix(bundle.w.transpose()), 5);
  REQUIRE(kernel.size() == 1);
  const long expected[16] = {1, 0, 0, 0, 0, 0, 3, 4, 3, 4, 0, 0, 3, 3, 0, 4};
  for (int i = 0; i < 16; ++i) CHECK(kernel[0].entries(i) == expected[i]);

  const auto cls = classify(g, bundle);
  CHECK(cls.verdict == FamilyVerdict::FamilyMember);
  CHECK(cls.p == 5);
  CHECK(cls.b == kExample1Dn / 50);
}

TEST_CASE("example 2: last invariant factor and family membership") {
  const auto cls = classify(example2_graph());
  CHECK(cls.verdict == FamilyVerdict::FamilyMember);
  CHECK(cls.p == 5);
  CHECK(cls.b == kExample2Dn / 50);
  CHECK(cls.snf.d(15) == kExample2Dn);
}

TEST_CASE("triangle is not controllable") {
  CHECK(classify(complete_graph(3)).verdict == FamilyVerdict::NotControllable);
}

TEST_CASE("an odd square-free determinant appears among small random graphs") {
  bool found = false;
  for (std::uint64_t seed = 0; seed < 200 && !found; ++seed) {
    const Graph g = random_graph(8, seed);
    const auto cls = classify(g);
    if (cls.verdict != FamilyVerdict::OddSquareFreeDgs) continue;
    found = true;
    for (const auto& [prime, mult] : cls.det_odd_factors.factors) {
      CHECK(mult == 1);
      CHECK(prime % 2 == 1);
    }
  }
  CHECK(found);
}

TEST_CASE("squared structure alone does not admit a graph into the family") {
  // Odd part with a cube factor.
  const auto high = classify(random_graph(10, 6));
  CHECK(high.verdict == FamilyVerdict::Other);
  bool has_high_mult = false;
  for (const auto& [prime, mult] : high.det_odd_factors.factors)
    if (mult >= 3) has_high_mult = true;
  CHECK(has_high_mult);

  // Two distinct squared odd primes.
  const auto two = classify(random_graph(10, 67));
  CHECK(two.verdict == FamilyVerdict::Other);
  int squared = 0;
  for (const auto& [prime, mult] : two.det_odd_factors.factors)
    if (mult == 2) ++squared;
  CHECK(squared >= 2);

  // Exactly one squared odd prime, but the rank condition fails (and the
  // SNF-shape test is asserted to agree inside classify).
  const auto bundle = build_walk_matrix(random_graph(10, 9));
  const auto rank_fail = classify(random_graph(10, 9), bundle);
  CHECK(rank_fail.verdict == FamilyVerdict::Other);
  squared = 0;
  Int squared_prime = 0;
  for (const auto& [prime, mult] : rank_fail.det_odd_factors.factors)
    if (mult == 2) {
      ++squared;
      squared_prime = prime;
    }
  REQUIRE(squared == 1);
  CHECK(rank_mod_p(bundle.w, squared_prime.get_si()) < 9);
}

TEST_CASE("classification is invariant under relabeling") {
  std::mt19937_64 rng(808);
  const std::vector<Graph> graphs = {example1_graph(), example2_graph(),
                                     random_graph(10, 4), random_graph(12, 9)};
  for (const Graph& g : graphs) {
    const auto base = classify(g);
    std::vector<int> perm(g.order());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const auto relabeled = classify(relabel(g, perm));
    CHECK(relabeled.verdict == base.verdict);
    CHECK(relabeled.p == base.p);
    CHECK(relabeled.b == base.b);
  }
}

TEST_CASE("classify agrees with a direct determinant and rank re-derivation") {
  // The library asserts the SNF-shape test against the det/rank test on every
  // call; this re-checks the family conditions from the public pieces.
  std::mt19937_64 rng(606);
  int family_hits = 0;
  for (int round = 0; round < 200; ++round) {
    const Graph g = random_graph(10, rng());
    const auto bundle = build_walk_matrix(g);
    const auto cls = classify(g, bundle);
    if (cls.verdict != FamilyVerdict::FamilyMember) continue;
    ++family_hits;
    const Int scaled = abs(bundle.det) >> 5;  // 2^{-floor(n/2)} |det W|, n = 10
    CHECK(scaled == Int(cls.p) * cls.p * cls.b);
    CHECK(rank_mod_p(bundle.w, cls.p) == 9);
    CHECK(rank_mod_p(bundle.w, 2) == 5);
    CHECK(cls.b % cls.p != 0);
    CHECK(cls.b % 2 == 1);
  }
  CHECK(family_hits > 0);
}
