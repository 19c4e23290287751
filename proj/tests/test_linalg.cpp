#include <doctest.h>

#include <random>

#include "cospec/linalg.hpp"

using namespace cospec;

namespace {

// Independent determinant oracle: cofactor expansion along the first row.
Int det_cofactor(const IntMatrix& m) {
  const Eigen::Index n = m.rows();
  if (n == 1) return m(0, 0);
  Int acc = 0;
  for (Eigen::Index c = 0; c < n; ++c) {
    if (m(0, c) == 0) continue;
    IntMatrix minor(n - 1, n - 1);
    for (Eigen::Index i = 1; i < n; ++i) {
      Eigen::Index jj = 0;
      for (Eigen::Index j = 0; j < n; ++j) {
        if (j == c) continue;
        minor(i - 1, jj++) = m(i, j);
      }
    }
    const Int term = m(0, c) * det_cofactor(minor);
    acc += (c % 2 == 0) ? term : -term;
  }
  return acc;
}

IntMatrix random_int_matrix(std::mt19937_64& rng, int n, int span = 9) {
  std::uniform_int_distribution<int> dist(-span, span);
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = dist(rng);
  return m;
}

IntMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows) {
  const int n = static_cast<int>(rows.size());
  const int c = static_cast<int>(rows.begin()->size());
  IntMatrix m(n, c);
  int i = 0;
  for (const auto& row : rows) {
    int j = 0;
    for (long v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

}  // namespace

TEST_CASE("det_bareiss on pinned examples") {
  CHECK(det_bareiss(IntMatrix::Identity(5, 5)) == 1);
  CHECK(det_bareiss(from_rows({{1, 2}, {3, 4}})) == -2);
  // Walk matrix of the 4-path.
  CHECK(det_bareiss(from_rows({{1, 1, 2, 3}, {1, 2, 3, 5}, {1, 2, 3, 5}, {1, 1, 2, 3}})) == 0);
}

TEST_CASE("det_bareiss rejects non-square input") {
  IntMatrix m(2, 3);
  m.setZero();
  CHECK_THROWS_AS(det_bareiss(m), std::invalid_argument);
}

TEST_CASE("det_bareiss equals cofactor expansion on random small matrices") {
  std::mt19937_64 rng(20240901);
  for (int round = 0; round < 300; ++round) {
    const int n = 1 + static_cast<int>(rng() % 5);
    const IntMatrix m = random_int_matrix(rng, n);
    CHECK(det_bareiss(m) == det_cofactor(m));
  }
}

TEST_CASE("smith_normal_form on pinned examples") {
  SUBCASE("diag(4,6)") {
    const auto snf = smith_normal_form(from_rows({{4, 0}, {0, 6}}));
    REQUIRE(snf.d.size() == 2);
    CHECK(snf.d(0) == 2);
    CHECK(snf.d(1) == 12);
  }
  SUBCASE("identity") {
    const auto snf = smith_normal_form(IntMatrix::Identity(7, 7));
    for (int i = 0; i < 7; ++i) CHECK(snf.d(i) == 1);
  }
}

TEST_CASE("smith_normal_form transforms, chain and determinant product") {
  std::mt19937_64 rng(555);
  for (int round = 0; round < 200; ++round) {
    const int n = 1 + static_cast<int>(rng() % 8);
    const IntMatrix m = random_int_matrix(rng, n, 6);
    const auto snf = smith_normal_form(m, true);

    const IntMatrix product = snf.u * m * snf.v;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        CHECK(product(i, j) == (i == j ? snf.d(i) : Int(0)));

    CHECK(abs(det_bareiss(snf.u)) == 1);
    CHECK(abs(det_bareiss(snf.v)) == 1);

    Int prod = 1;
    for (int i = 0; i < n; ++i) {
      CHECK(snf.d(i) >= 0);
      if (i + 1 < n && snf.d(i + 1) != 0) {
        REQUIRE(snf.d(i) != 0);
        CHECK(snf.d(i + 1) % snf.d(i) == 0);
      }
      prod *= snf.d(i);
    }
    CHECK(prod == abs(det_bareiss(m)));
  }
}

TEST_CASE("rank_mod_p matches the invariant-factor count") {
  std::mt19937_64 rng(777);
  for (int round = 0; round < 100; ++round) {
    const int n = 1 + static_cast<int>(rng() % 6);
    const IntMatrix m = random_int_matrix(rng, n, 8);
    const auto snf = smith_normal_form(m);
    for (std::int64_t p : {2, 3, 5, 7}) {
      std::int64_t not_divisible = 0;
      for (int i = 0; i < n; ++i)
        if (snf.d(i) != 0 && snf.d(i) % p != 0) ++not_divisible;
      CHECK(rank_mod_p(m, p) == not_divisible);
    }
  }
}

TEST_CASE("rank_mod_p pinned examples and errors") {
  CHECK(rank_mod_p(IntMatrix::Identity(6, 6), 13) == 6);
  CHECK(rank_mod_p(from_rows({{1, 2}, {2, 4}}), 5) == 1);
  CHECK_THROWS_AS(rank_mod_p(IntMatrix::Identity(2, 2), 6), std::invalid_argument);
  CHECK_THROWS_AS(rank_mod_p(IntMatrix::Identity(2, 2), 1), std::invalid_argument);
}

TEST_CASE("nullspace_mod_p basis shape and canonicalization") {
  SUBCASE("zero matrix has the full unit basis") {
    const auto basis = nullspace_mod_p(IntMatrix::Zero(3, 3), 3);
    REQUIRE(basis.size() == 3);
    for (int k = 0; k < 3; ++k) {
      CHECK(basis[k].p == 3);
      for (int i = 0; i < 3; ++i)
        CHECK(basis[k].entries(i) == (i == k ? 1 : 0));
    }
  }
  SUBCASE("identity has an empty kernel") {
    CHECK(nullspace_mod_p(IntMatrix::Identity(4, 4), 7).empty());
  }
  SUBCASE("even or composite moduli are rejected") {
    CHECK_THROWS_AS(nullspace_mod_p(IntMatrix::Zero(2, 2), 2), std::invalid_argument);
    CHECK_THROWS_AS(nullspace_mod_p(IntMatrix::Zero(2, 2), 9), std::invalid_argument);
  }
  SUBCASE("kernel vectors start with 1 and lie in the kernel") {
    std::mt19937_64 rng(99);
    for (int round = 0; round < 50; ++round) {
      const int n = 2 + static_cast<int>(rng() % 5);
      IntMatrix m = random_int_matrix(rng, n, 4);
      m.row(n - 1) = m.row(0);  // force a nontrivial kernel
      for (std::int64_t p : {3, 5}) {
        for (const auto& z : nullspace_mod_p(m, p)) {
          Eigen::Index first = -1;
          for (Eigen::Index i = 0; i < n; ++i)
            if (z.entries(i) != 0) {
              first = i;
              break;
            }
          REQUIRE(first >= 0);
          CHECK(z.entries(first) == 1);
          for (Eigen::Index i = 0; i < n; ++i) {
            Int dot = 0;
            for (Eigen::Index j = 0; j < n; ++j) dot += m(i, j) * z.entries(j);
            CHECK(residue_mod(dot, p) == 0);
          }
        }
      }
    }
  }
}

TEST_CASE("char_poly pinned examples") {
  SUBCASE("two vertices joined by an edge: x^2 - 1") {
    const auto c = char_poly(from_rows({{0, 1}, {1, 0}}));
    REQUIRE(c.size() == 3);
    CHECK(c[0] == -1);
    CHECK(c[1] == 0);
    CHECK(c[2] == 1);
  }
  SUBCASE("zero matrix: x^n") {
    const auto c = char_poly(IntMatrix::Zero(5, 5));
    for (int i = 0; i < 5; ++i) CHECK(c[i] == 0);
    CHECK(c[5] == 1);
  }
  SUBCASE("triangle: x^3 - 3x - 2") {
    const auto c = char_poly(from_rows({{0, 1, 1}, {1, 0, 1}, {1, 1, 0}}));
    REQUIRE(c.size() == 4);
    CHECK(c[0] == -2);
    CHECK(c[1] == -3);
    CHECK(c[2] == 0);
    CHECK(c[3] == 1);
  }
}

TEST_CASE("char_poly is invariant under permutation conjugation") {
  std::mt19937_64 rng(4242);
  for (int round = 0; round < 30; ++round) {
    const int n = 2 + static_cast<int>(rng() % 6);
    const IntMatrix m = random_int_matrix(rng, n, 7);
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    IntMatrix pm(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) pm(perm[i], perm[j]) = m(i, j);
    CHECK(char_poly(m) == char_poly(pm));
  }
}

TEST_CASE("char_poly constant term matches the determinant") {
  std::mt19937_64 rng(31337);
  for (int round = 0; round < 50; ++round) {
    const int n = 1 + static_cast<int>(rng() % 6);
    const IntMatrix m = random_int_matrix(rng, n);
    const auto c = char_poly(m);
    Int expected = det_bareiss(m);
    if (n % 2 == 1) expected = -expected;  // det(xI - m) at x = 0 is (-1)^n det m
    CHECK(c[0] == expected);
  }
}

TEST_CASE("modular helpers") {
  CHECK(mulmod(1'000'000'007, 998'244'353, (std::int64_t{1} << 61) - 1) ==
        static_cast<std::int64_t>(static_cast<__int128>(1'000'000'007) * 998'244'353 %
                                  ((std::int64_t{1} << 61) - 1)));
  for (std::int64_t p : {3, 5, 101, 65537}) {
    for (std::int64_t a = 1; a < std::min<std::int64_t>(p, 40); ++a) {
      const std::int64_t inv = invmod(a, p);
      CHECK(mulmod(a, inv, p) == 1);
    }
  }
  CHECK(residue_mod(Int(-7), 5) == 3);
  CHECK(residue_mod(Int("123456789123456789123456789"), 97) ==
        Int("123456789123456789123456789") % 97);
}
