#include "cospec/verify.hpp"

#include "cospec/walk.hpp"

#include <stdexcept>

namespace cospec {

namespace {

// Exact solve of a * x = rhs over the rationals by Gaussian elimination.
// Throws on a singular left-hand side.
RatMatrix solve_rational(const IntMatrix& a, const IntMatrix& rhs) {
  const Eigen::Index n = a.rows();
  RatMatrix m(n, n + rhs.cols());
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = Rat(a(i, j));
    for (Eigen::Index j = 0; j < rhs.cols(); ++j) m(i, n + j) = Rat(rhs(i, j));
  }
  for (Eigen::Index c = 0; c < n; ++c) {
    Eigen::Index piv = c;
    while (piv < n && m(piv, c) == 0) ++piv;
    if (piv == n) throw std::runtime_error("solve_rational: singular matrix");
    if (piv != c) m.row(piv).swap(m.row(c));
    const Rat inv = 1 / m(c, c);
    for (Eigen::Index j = c; j < m.cols(); ++j) m(c, j) *= inv;
    for (Eigen::Index i = 0; i < n; ++i) {
      if (i == c || m(i, c) == 0) continue;
      const Rat f = m(i, c);
      for (Eigen::Index j = c; j < m.cols(); ++j) m(i, j) -= f * m(c, j);
    }
  }
  return m.rightCols(rhs.cols());
}

}  // namespace

bool generalized_cospectral(const Graph& g, const Graph& h) {
  if (g.order() != h.order())
    throw std::invalid_argument("generalized_cospectral: vertex counts differ");
  if (char_poly(g.adjacency_matrix()) != char_poly(h.adjacency_matrix())) return false;
  return char_poly(complement(g).adjacency_matrix()) ==
         char_poly(complement(h).adjacency_matrix());
}

Int level_of(const RatMatrix& q) {
  Int level = 1;
  for (Eigen::Index i = 0; i < q.rows(); ++i)
    for (Eigen::Index j = 0; j < q.cols(); ++j)
      level = lcm(level, Int(q(i, j).get_den()));
  return level;
}

RecoveredQ recover_q(const Graph& g, const Graph& h) {
  if (g.order() != h.order())
    throw std::invalid_argument("recover_q: vertex counts differ");
  const WalkMatrixBundle wg = build_walk_matrix(g);
  if (wg.det == 0) throw std::invalid_argument("recover_q: g is not controllable");
  const WalkMatrixBundle wh = build_walk_matrix(h);
  if (wh.det == 0)
    throw std::runtime_error("recover_q: walk matrix of candidate mate is singular");

  // Q^T W(g) = W(h)  <=>  W(g)^T Q = W(h)^T.
  const RatMatrix q = solve_rational(wg.w.transpose(), wh.w.transpose());

  const Eigen::Index n = q.rows();
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      Rat dot(0);
      for (Eigen::Index k = 0; k < n; ++k) dot += q(k, i) * q(k, j);
      if (dot != Rat(i == j ? 1 : 0))
        throw std::runtime_error("recover_q: recovered matrix is not orthogonal");
    }
  for (Eigen::Index i = 0; i < n; ++i) {
    Rat row_sum(0);
    for (Eigen::Index j = 0; j < n; ++j) row_sum += q(i, j);
    if (row_sum != 1)
      throw std::runtime_error("recover_q: recovered matrix is not regular");
  }

  RecoveredQ out;
  out.level = level_of(q);
  out.q_num.resize(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      Rat scaled = q(i, j) * Rat(out.level);
      if (scaled.get_den() != 1)
        throw TheoryViolation("recover_q: level does not clear denominators");
      out.q_num(i, j) = scaled.get_num();
    }

  // Conjugation must reproduce the candidate adjacency exactly.
  const Int level_sq = out.level * out.level;
  const IntMatrix lhs = out.q_num.transpose() * g.adjacency_matrix() * out.q_num;
  const IntMatrix rhs = h.adjacency_matrix() * level_sq;
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      if (lhs(i, j) != rhs(i, j))
        throw std::runtime_error("recover_q: Q^T A(g) Q differs from A(h)");
  return out;
}

Int xi_invariant(const IntMatrix& m) {
  if (m.rows() != m.cols() || m.rows() < 1)
    throw std::invalid_argument("xi_invariant: matrix must be square");
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = i + 1; j < m.cols(); ++j)
      if (m(i, j) != m(j, i))
        throw std::invalid_argument("xi_invariant: matrix must be symmetric");
  Int xi = 0;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = i + 1; j < m.cols(); ++j) {
      const Int off = m(i, j);
      xi += 2 * m(i, i) * m(j, j) - off * off - (1 - off) * (1 - off);
    }
  return xi;
}

namespace {

CospectralCertificate certify_impl(const Graph& g, const Graph& h,
                                   std::int64_t expected_level) {
  CospectralCertificate cert;
  cert.charpoly_g = char_poly(g.adjacency_matrix());
  cert.charpoly_h = char_poly(h.adjacency_matrix());
  cert.charpoly_gc = char_poly(complement(g).adjacency_matrix());
  cert.charpoly_hc = char_poly(complement(h).adjacency_matrix());

  auto fail = [&cert](const std::string& name) {
    cert.passed = false;
    cert.failed_check = name;
    return cert;
  };

  if (cert.charpoly_g != cert.charpoly_h || cert.charpoly_gc != cert.charpoly_hc)
    return fail("generalized_cospectral");

  RecoveredQ q;
  try {
    q = recover_q(g, h);
  } catch (const std::exception&) {
    return fail("recover_q");
  }
  cert.q_level = q.level;
  cert.q_num = q.q_num;

  if (expected_level > 0) {
    if (q.level != expected_level) return fail("level");
    if (rank_mod_p(q.q_num, expected_level) != 1) return fail("rank_mod_p");
  } else if (q.level == 1) {
    return fail("level");
  }

  const int n = h.order();
  if (xi_invariant(h.adjacency_matrix()) != Int(-static_cast<long>(n) * (n - 1) / 2))
    return fail("xi");

  // Walk-matrix transport: Q^T W(g) = W(h), i.e. q_num^T W(g) = level * W(h).
  const IntMatrix lhs = q.q_num.transpose() * build_walk_matrix(g).w;
  const IntMatrix rhs = build_walk_matrix(h).w * q.level;
  for (Eigen::Index i = 0; i < lhs.rows(); ++i)
    for (Eigen::Index j = 0; j < lhs.cols(); ++j)
      if (lhs(i, j) != rhs(i, j)) return fail("walk_identity");

  if (is_isomorphic(g, h)) return fail("isomorphism");

  cert.passed = true;
  return cert;
}

}  // namespace

CospectralCertificate certify_mate(const Graph& g, const MateResult& result) {
  if (result.verdict != MateResult::Verdict::Mate || !result.mate || !result.q)
    throw std::invalid_argument("certify_mate: result does not carry a mate");
  return certify_impl(g, *result.mate, result.q->p);
}

CospectralCertificate certify_pair(const Graph& g, const Graph& h,
                                   std::int64_t expected_level) {
  return certify_impl(g, h, expected_level);
}

}  // namespace cospec
