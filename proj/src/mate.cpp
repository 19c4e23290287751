#include "cospec/mate.hpp"

#include <algorithm>
#include <stdexcept>

namespace cospec {

namespace {

void require_odd_prime(std::int64_t p, const char* who) {
  if (p < 3 || p % 2 == 0 || p >= (std::int64_t{1} << 26) ||
      !is_probable_prime(Int(p)))
    throw std::invalid_argument(std::string(who) + ": p must be an odd prime below 2^26");
}

// Visits every subset of `candidates` of the given size whose |u| entries
// sum to `target`, in lexicographic index order.
template <typename Sink>
void subsets_with_sum(const std::vector<int>& candidates, const I64Vector& u,
                      int size, std::int64_t target, std::size_t start,
                      std::vector<int>& picked, Sink&& sink) {
  if (size == 0) {
    if (target == 0) sink(picked);
    return;
  }
  for (std::size_t i = start; i < candidates.size(); ++i) {
    const int idx = candidates[i];
    const std::int64_t mag = std::abs(u(idx));
    if (mag > target) continue;
    picked.push_back(idx);
    subsets_with_sum(candidates, u, size - 1, target - mag, i + 1, picked, sink);
    picked.pop_back();
  }
}

// Visits every subset of `candidates` of the given size, lexicographically.
template <typename Sink>
void subsets_of_size(const std::vector<int>& candidates, int size, std::size_t start,
                     std::vector<int>& picked, Sink&& sink) {
  if (size == 0) {
    sink(picked);
    return;
  }
  for (std::size_t i = start; i < candidates.size(); ++i) {
    picked.push_back(candidates[i]);
    subsets_of_size(candidates, size - 1, i + 1, picked, sink);
    picked.pop_back();
  }
}

}  // namespace

ModVector kernel_vector(const WalkMatrixBundle& bundle, std::int64_t p) {
  require_odd_prime(p, "kernel_vector");
  const IntMatrix wt = bundle.w.transpose();
  auto basis = nullspace_mod_p(wt, p);
  if (basis.size() != 1)
    throw std::invalid_argument("kernel_vector: kernel dimension is not 1");
  ModVector v = std::move(basis.front());

  // Scale so the last nonzero entry is 1.
  for (Eigen::Index i = v.entries.size(); i-- > 0;) {
    if (v.entries(i) == 0) continue;
    const std::int64_t s = invmod(v.entries(i), p);
    if (s != 1)
      for (Eigen::Index j = 0; j < v.entries.size(); ++j)
        v.entries(j) = mulmod(v.entries(j), s, p);
    break;
  }

  // The first column of W is the all-one vector, so e^T v = 0 (mod p) is forced.
  std::int64_t sum = 0;
  for (Eigen::Index i = 0; i < v.entries.size(); ++i) sum += v.entries(i);
  if (sum % p != 0)
    throw TheoryViolation("kernel_vector: entry sum of kernel solution not 0 mod p");
  return v;
}

std::pair<ModVector, std::vector<int>> strip_zeros(const ModVector& v) {
  ModVector out;
  out.p = v.p;
  std::vector<int> zero_positions;
  std::vector<std::int64_t> kept;
  for (Eigen::Index i = 0; i < v.entries.size(); ++i) {
    if (v.entries(i) == 0)
      zero_positions.push_back(static_cast<int>(i));
    else
      kept.push_back(v.entries(i));
  }
  if (kept.empty())
    throw std::invalid_argument("strip_zeros: vector is zero mod p");
  out.entries = Eigen::Map<const I64Vector>(kept.data(), static_cast<Eigen::Index>(kept.size()));
  return {std::move(out), std::move(zero_positions)};
}

ShortestRep shortest_p_representative(const I64Vector& v, std::int64_t p) {
  require_odd_prime(p, "shortest_p_representative");
  ShortestRep rep;
  rep.p = p;
  rep.u.resize(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    std::int64_t r = v(i) % p;
    if (r < 0) r += p;
    if (r == 0)
      throw std::invalid_argument("shortest_p_representative: entry divisible by p");
    rep.u(i) = r <= (p - 1) / 2 ? r : r - p;
  }
  std::int64_t sum = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    sum += rep.u(i);
    rep.norm += rep.u(i) * rep.u(i);
  }
  if ((sum - p) % p == 0) rep.sum_s = (sum - p) / p;
  return rep;
}

std::vector<PerfectRep> enumerate_perfect_reps(const ShortestRep& u) {
  std::vector<PerfectRep> out;
  if (!u.sum_s.has_value()) return out;
  const std::int64_t s = *u.sum_s;
  const std::int64_t p = u.p;
  if (std::abs(s) > 3 || u.norm > p * p) return out;

  std::vector<int> negatives, positives;
  for (Eigen::Index i = 0; i < u.u.size(); ++i)
    (u.u(i) < 0 ? negatives : positives).push_back(static_cast<int>(i));

  // Any perfect representative is u with at most three entries shifted by
  // ±p: increase a set I of negative entries, decrease a set D of positive
  // entries, with |D| - |I| = s and a fixed magnitude sum per (|I|, |D|).
  for (int total = 0; total <= 3; ++total) {
    for (int raise = 0; raise <= total; ++raise) {
      const int lower = total - raise;
      if (lower - raise != s) continue;
      // 2p must divide u^T u + p^2 (|I| + |D| - 1) for the target sum to be
      // integral.
      const std::int64_t numerator = u.norm + p * p * (total - 1);
      if (numerator % (2 * p) != 0) continue;
      const std::int64_t target = numerator / (2 * p);
      if (target < 0) continue;

      // Choose the raised set among negative entries, then the lowered set
      // among positive ones with the remaining magnitude sum.
      std::vector<int> pick_i;
      subsets_of_size(negatives, raise, 0, pick_i, [&](const std::vector<int>& iset) {
        std::int64_t used = 0;
        for (int idx : iset) used += -u.u(idx);
        if (used > target) return;
        std::vector<int> pick_d;
        subsets_with_sum(positives, u.u, lower, target - used, 0, pick_d,
                         [&](const std::vector<int>& dset) {
                           PerfectRep w{u.u};
                           for (int idx : iset) w.w(idx) += p;
                           for (int idx : dset) w.w(idx) -= p;
                           out.push_back(std::move(w));
                         });
      });
    }
  }
  return out;
}

std::vector<PerfectRep> brute_force_perfect_reps(const ShortestRep& u) {
  const Eigen::Index m = u.u.size();
  if (m > 16)
    throw std::invalid_argument("brute_force_perfect_reps: dimension above 16");
  const std::int64_t p = u.p;
  std::vector<PerfectRep> out;
  I64Vector w = u.u;

  auto rec = [&](auto&& self, Eigen::Index i, std::int64_t sum, std::int64_t norm) -> void {
    if (norm > p * p) return;
    if (i == m) {
      if (sum == p && norm == p * p) out.push_back(PerfectRep{w});
      return;
    }
    for (int shift = -1; shift <= 1; ++shift) {
      const std::int64_t wi = u.u(i) + shift * p;
      w(i) = wi;
      self(self, i + 1, sum + wi, norm + wi * wi);
    }
    w(i) = u.u(i);
  };
  rec(rec, 0, 0, 0);
  return out;
}

PrimitiveMatrix assemble_primitive(const std::vector<PerfectRep>& reps,
                                   const std::vector<int>& zero_positions, int n,
                                   std::int64_t p) {
  require_odd_prime(p, "assemble_primitive");
  const int m = static_cast<int>(reps.size());
  if (m + static_cast<int>(zero_positions.size()) != n)
    throw std::invalid_argument("assemble_primitive: rep count plus zero count != n");
  if (m < 1) throw std::invalid_argument("assemble_primitive: no representatives");

  for (int a = 0; a < m; ++a) {
    if (reps[a].w.size() != m)
      throw std::invalid_argument("assemble_primitive: representative dimension mismatch");
    std::int64_t norm = 0;
    for (Eigen::Index i = 0; i < reps[a].w.size(); ++i) norm += reps[a].w(i) * reps[a].w(i);
    if (norm != p * p)
      throw TheoryViolation("assemble_primitive: representative norm is not p^2");
    for (int b = a + 1; b < m; ++b) {
      if ((reps[a].w.array() == reps[b].w.array()).all())
        throw TheoryViolation("assemble_primitive: duplicate representatives");
      if (reps[a].w.dot(reps[b].w) != 0)
        throw TheoryViolation("assemble_primitive: representatives not orthogonal");
    }
  }

  std::vector<bool> is_zero_row(n, false);
  for (int idx : zero_positions) {
    if (idx < 0 || idx >= n || is_zero_row[idx])
      throw std::invalid_argument("assemble_primitive: bad zero position");
    is_zero_row[idx] = true;
  }
  std::vector<int> support;
  for (int i = 0; i < n; ++i)
    if (!is_zero_row[i]) support.push_back(i);

  PrimitiveMatrix q;
  q.p = p;
  q.qhat = IntMatrix::Zero(n, n);
  for (int c = 0; c < m; ++c)
    for (int r = 0; r < m; ++r) q.qhat(support[r], c) = reps[c].w(r);
  for (std::size_t k = 0; k < zero_positions.size(); ++k)
    q.qhat(zero_positions[k], m + static_cast<int>(k)) = p;

  validate_primitive(q);
  return q;
}

void validate_primitive(const PrimitiveMatrix& q) {
  const Eigen::Index n = q.qhat.rows();
  const Int p = q.p;
  if (q.qhat.cols() != n) throw TheoryViolation("primitive matrix not square");

  const IntMatrix gram = q.qhat.transpose() * q.qhat;
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      if (gram(i, j) != (i == j ? p * p : Int(0)))
        throw TheoryViolation("primitive matrix: qhat^T qhat != p^2 I");

  for (Eigen::Index i = 0; i < n; ++i) {
    Int row_sum = 0, col_sum = 0;
    for (Eigen::Index j = 0; j < n; ++j) {
      row_sum += q.qhat(i, j);
      col_sum += q.qhat(j, i);
    }
    if (row_sum != p || col_sum != p)
      throw TheoryViolation("primitive matrix: row or column sums differ from p");
  }

  bool nonzero_mod_p = false;
  for (Eigen::Index i = 0; i < n && !nonzero_mod_p; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      if (residue_mod(q.qhat(i, j), q.p) != 0) {
        nonzero_mod_p = true;
        break;
      }
  if (!nonzero_mod_p) throw TheoryViolation("primitive matrix: level below p");

  if (rank_mod_p(q.qhat, q.p) != 1)
    throw TheoryViolation("primitive matrix: rank mod p is not 1");
}

MateResult find_mate(const Graph& g, const FamilyClassification& cls, bool sanity_mode) {
  if (cls.verdict != FamilyVerdict::FamilyMember)
    throw std::invalid_argument("find_mate: graph is not a family member");
  const WalkMatrixBundle bundle = build_walk_matrix(g);
  return find_mate_from_kernel(g, kernel_vector(bundle, cls.p), sanity_mode);
}

MateResult find_mate_from_kernel(const Graph& g, const ModVector& v, bool sanity_mode) {
  const std::int64_t p = v.p;
  require_odd_prime(p, "find_mate_from_kernel");
  if (v.entries.size() != g.order())
    throw std::invalid_argument("find_mate_from_kernel: kernel dimension mismatch");

  MateResult result;
  result.kernel = v;

  bool trivial = true;
  std::int64_t vv = 0;
  for (Eigen::Index i = 0; i < v.entries.size(); ++i) {
    if (v.entries(i) != 0) trivial = false;
    vv += v.entries(i) * v.entries(i);
  }
  if (trivial)
    throw std::invalid_argument("find_mate_from_kernel: kernel vector is zero mod p");

  if (vv % p != 0) {
    result.verdict = MateResult::Verdict::Dgs;
    return result;
  }

  result.enumerated = true;
  auto [vstar, zero_positions] = strip_zeros(v);
  const std::int64_t m = vstar.entries.size();

  std::vector<PerfectRep> collected;
  std::int64_t total = 0;
  for (std::int64_t k = 1; k <= p - 1; ++k) {
    I64Vector kv = vstar.entries;
    for (Eigen::Index i = 0; i < kv.size(); ++i) kv(i) = mulmod(kv(i), k, p);
    const ShortestRep u = shortest_p_representative(kv, p);
    if (!u.sum_s.has_value())
      throw TheoryViolation("find_mate: kernel multiple has non-integral shift count");
    auto reps = enumerate_perfect_reps(u);
    result.rep_census.push_back(static_cast<std::int64_t>(reps.size()));
    total += static_cast<std::int64_t>(reps.size());
    for (auto& r : reps) collected.push_back(std::move(r));
    if (total > m)
      throw TheoryViolation("find_mate: representative count exceeds nonzero support");
    if (total == m && !sanity_mode) break;
  }

  if (total < m) {
    result.verdict = MateResult::Verdict::Dgs;
    return result;
  }

  PrimitiveMatrix q = assemble_primitive(collected, zero_positions, g.order(), p);

  const IntMatrix b = q.qhat.transpose() * g.adjacency_matrix() * q.qhat;
  const Int p2 = Int(p) * p;
  IntMatrix adj(b.rows(), b.cols());
  for (Eigen::Index i = 0; i < b.rows(); ++i)
    for (Eigen::Index j = 0; j < b.cols(); ++j) {
      if (!mpz_divisible_p(b(i, j).get_mpz_t(), p2.get_mpz_t()))
        throw TheoryViolation("find_mate: similar matrix is not integral");
      adj(i, j) = b(i, j) / p2;
    }
  Graph mate = [&] {
    try {
      return graph_from_adjacency(adj);
    } catch (const std::invalid_argument& e) {
      throw TheoryViolation(std::string("find_mate: similar matrix is not an adjacency matrix: ") + e.what());
    }
  }();

  result.verdict = MateResult::Verdict::Mate;
  result.mate = std::move(mate);
  result.q = std::move(q);
  return result;
}

}  // namespace cospec
