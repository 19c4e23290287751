#include "cospec/linalg.hpp"

#include "cospec/factor.hpp"

#include <algorithm>
#include <stdexcept>

namespace cospec {

namespace {

void require_square(const IntMatrix& m, const char* who) {
  if (m.rows() < 1 || m.rows() != m.cols())
    throw std::invalid_argument(std::string(who) + ": matrix must be square and nonempty");
}

void require_prime(std::int64_t p, const char* who) {
  if (p < 2 || p >= (std::int64_t{1} << 31) || !is_probable_prime(Int(p)))
    throw std::invalid_argument(std::string(who) + ": modulus must be a prime below 2^31");
}

// Residue grid of m modulo p, entries in [0, p-1].
std::vector<std::vector<std::int64_t>> residue_grid(const IntMatrix& m, std::int64_t p) {
  std::vector<std::vector<std::int64_t>> a(m.rows(), std::vector<std::int64_t>(m.cols()));
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) a[i][j] = residue_mod(m(i, j), p);
  return a;
}

// Reduced row echelon form in place; returns pivot columns.
std::vector<Eigen::Index> rref_mod_p(std::vector<std::vector<std::int64_t>>& a,
                                     std::int64_t p) {
  const Eigen::Index rows = static_cast<Eigen::Index>(a.size());
  const Eigen::Index cols = rows ? static_cast<Eigen::Index>(a[0].size()) : 0;
  std::vector<Eigen::Index> pivots;
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index sel = -1;
    for (Eigen::Index i = r; i < rows; ++i)
      if (a[i][c] != 0) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    std::swap(a[r], a[sel]);
    const std::int64_t scale = invmod(a[r][c], p);
    for (Eigen::Index j = c; j < cols; ++j) a[r][j] = mulmod(a[r][j], scale, p);
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const std::int64_t f = a[i][c];
      for (Eigen::Index j = c; j < cols; ++j) {
        a[i][j] = (a[i][j] - mulmod(f, a[r][j], p)) % p;
        if (a[i][j] < 0) a[i][j] += p;
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t p) {
  return static_cast<std::int64_t>(static_cast<__int128>(a) * b % p);
}

std::int64_t invmod(std::int64_t a, std::int64_t p) {
  a %= p;
  if (a < 0) a += p;
  if (a == 0) throw std::invalid_argument("invmod: value divisible by modulus");
  std::int64_t old_r = a, r = p, old_s = 1, s = 0;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    std::swap(old_r -= q * r, r);
    std::swap(old_s -= q * s, s);
  }
  return old_s < 0 ? old_s + p : old_s;
}

std::int64_t residue_mod(const Int& x, std::int64_t p) {
  return static_cast<std::int64_t>(
      mpz_fdiv_ui(x.get_mpz_t(), static_cast<unsigned long>(p)));
}

Int det_bareiss(const IntMatrix& m) {
  require_square(m, "det_bareiss");
  const Eigen::Index n = m.rows();
  IntMatrix a = m;
  Int prev = 1;
  int sign = 1;
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      Eigen::Index piv = k + 1;
      while (piv < n && a(piv, k) == 0) ++piv;
      if (piv == n) return Int(0);
      a.row(k).swap(a.row(piv));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) {
        Int t = a(k, k) * a(i, j) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  Int det = a(n - 1, n - 1);
  if (sign < 0) det = -det;
  return det;
}

SnfDecomposition smith_normal_form(const IntMatrix& m, bool want_transforms) {
  require_square(m, "smith_normal_form");
  const Eigen::Index n = m.rows();

  IntMatrix d = m;
  SnfDecomposition out;
  out.has_transforms = want_transforms;
  if (want_transforms) {
    out.u = IntMatrix::Identity(n, n);
    out.v = IntMatrix::Identity(n, n);
  }

  auto swap_rows = [&](Eigen::Index i, Eigen::Index j) {
    if (i == j) return;
    d.row(i).swap(d.row(j));
    if (want_transforms) out.u.row(i).swap(out.u.row(j));
  };
  auto swap_cols = [&](Eigen::Index i, Eigen::Index j) {
    if (i == j) return;
    d.col(i).swap(d.col(j));
    if (want_transforms) out.v.col(i).swap(out.v.col(j));
  };
  auto add_row = [&](Eigen::Index dst, Eigen::Index src, const Int& f) {
    d.row(dst) += f * d.row(src);
    if (want_transforms) out.u.row(dst) += f * out.u.row(src);
  };
  auto add_col = [&](Eigen::Index dst, Eigen::Index src, const Int& f) {
    d.col(dst) += f * d.col(src);
    if (want_transforms) out.v.col(dst) += f * out.v.col(src);
  };
  auto negate_row = [&](Eigen::Index i) {
    d.row(i) = -d.row(i);
    if (want_transforms) out.u.row(i) = -out.u.row(i);
  };

  for (Eigen::Index t = 0; t < n; ++t) {
    for (;;) {
      // Pivot: minimal nonzero absolute value in the trailing submatrix.
      Eigen::Index pr = -1, pc = -1;
      Int best;
      for (Eigen::Index i = t; i < n; ++i)
        for (Eigen::Index j = t; j < n; ++j) {
          if (d(i, j) == 0) continue;
          Int mag = abs(d(i, j));
          if (pr < 0 || mag < best) {
            best = mag;
            pr = i;
            pc = j;
          }
        }
      if (pr < 0) {
        t = n;  // trailing block is zero
        break;
      }
      swap_rows(t, pr);
      swap_cols(t, pc);

      bool clean = true;
      for (Eigen::Index i = t + 1; i < n; ++i) {
        if (d(i, t) == 0) continue;
        Int q = d(i, t) / d(t, t);
        if (q != 0) add_row(i, t, -q);
        if (d(i, t) != 0) clean = false;
      }
      for (Eigen::Index j = t + 1; j < n; ++j) {
        if (d(t, j) == 0) continue;
        Int q = d(t, j) / d(t, t);
        if (q != 0) add_col(j, t, -q);
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Pivot must divide everything that remains, or the chain breaks.
      Eigen::Index bad = -1;
      for (Eigen::Index i = t + 1; i < n && bad < 0; ++i)
        for (Eigen::Index j = t + 1; j < n; ++j)
          if (d(i, j) % d(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad >= 0) {
        add_row(t, bad, Int(1));
        continue;
      }
      if (d(t, t) < 0) negate_row(t);
      break;
    }
    if (t >= n) break;
  }

  out.d = d.diagonal();
  return out;
}

std::int64_t rank_mod_p(const IntMatrix& m, std::int64_t p) {
  require_prime(p, "rank_mod_p");
  auto a = residue_grid(m, p);
  return static_cast<std::int64_t>(rref_mod_p(a, p).size());
}

std::vector<ModVector> nullspace_mod_p(const IntMatrix& m, std::int64_t p) {
  require_prime(p, "nullspace_mod_p");
  if (p == 2) throw std::invalid_argument("nullspace_mod_p: modulus must be odd");

  auto a = residue_grid(m, p);
  const auto pivots = rref_mod_p(a, p);
  const Eigen::Index cols = m.cols();

  std::vector<ModVector> basis;
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;

  for (Eigen::Index f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    ModVector z;
    z.p = p;
    z.entries = I64Vector::Zero(cols);
    z.entries(f) = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) {
      const std::int64_t coeff = a[k][f];
      if (coeff != 0) z.entries(pivots[k]) = p - coeff;
    }
    // Canonical representative: first nonzero entry scaled to 1.
    for (Eigen::Index i = 0; i < cols; ++i) {
      if (z.entries(i) == 0) continue;
      const std::int64_t s = invmod(z.entries(i), p);
      if (s != 1)
        for (Eigen::Index j = i; j < cols; ++j)
          z.entries(j) = mulmod(z.entries(j), s, p);
      break;
    }
    basis.push_back(std::move(z));
  }
  return basis;
}

std::vector<Int> char_poly(const IntMatrix& m) {
  require_square(m, "char_poly");
  const Eigen::Index n = m.rows();
  std::vector<Int> c(static_cast<std::size_t>(n) + 1);
  c[n] = 1;

  IntMatrix am = m;  // A * M_k, starting with M_1 = I
  c[n - 1] = -am.trace();
  for (Eigen::Index k = 2; k <= n; ++k) {
    IntMatrix mk = am;
    for (Eigen::Index i = 0; i < n; ++i) mk(i, i) += c[n - k + 1];
    am = m * mk;
    Int tr = -am.trace();
    if (!mpz_divisible_ui_p(tr.get_mpz_t(), static_cast<unsigned long>(k)))
      throw TheoryViolation("char_poly: trace recurrence division not exact");
    mpz_divexact_ui(c[n - k].get_mpz_t(), tr.get_mpz_t(), static_cast<unsigned long>(k));
  }
  return c;
}

}  // namespace cospec
