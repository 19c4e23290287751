#ifndef COSPEC_GRAPH_HPP
#define COSPEC_GRAPH_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cospec/numeric.hpp"

namespace cospec {

/// Simple undirected labeled graph on up to 32 vertices. Adjacency rows are
/// single machine words; the diagonal is always zero.
class Graph {
 public:
  static constexpr int kMaxVertices = 32;

  explicit Graph(int n);

  int order() const { return n_; }
  bool has_edge(int i, int j) const { return (rows_[i] >> j) & 1u; }
  void set_edge(int i, int j, bool present = true);
  int degree(int i) const;
  int edge_count() const;
  std::uint32_t row_bits(int i) const { return rows_[i]; }

  /// Adjacency matrix as exact integers (0/1 entries).
  IntMatrix adjacency_matrix() const;

  bool operator==(const Graph& other) const {
    return n_ == other.n_ && rows_ == other.rows_;
  }

 private:
  int n_;
  std::vector<std::uint32_t> rows_;
};

/// Raised on malformed graph6 input; `offset` is the byte position of the
/// first offending byte.
class Graph6ParseError : public std::runtime_error {
 public:
  Graph6ParseError(const std::string& message, std::size_t offset);
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// Decode one graph6 record (no trailing newline). Bit layout follows the
/// published format description exactly.
Graph parse_graph6(std::string_view record);

/// Canonical graph6 record; parse_graph6 inverts it.
std::string write_graph6(const Graph& g);

/// Adjacency-matrix text: n on the first line, then n lines of 0/1 separated
/// by spaces.
Graph parse_adjacency_text(std::string_view text);
std::string write_adjacency_text(const Graph& g);

/// Build a graph from a symmetric 0/1 matrix with zero diagonal.
Graph graph_from_adjacency(const IntMatrix& a);

Graph complement(const Graph& g);

/// Uniform labeled random graph: every pair is an edge independently with
/// probability 1/2. Deterministic for a fixed seed.
Graph random_graph(int n, std::uint64_t seed);

/// Apply vertex relabeling: vertex i of g becomes perm[i] in the result.
Graph relabel(const Graph& g, const std::vector<int>& perm);

/// Vertex bijection mapping edges of g onto edges of h, if one exists.
/// Color refinement narrows the candidates before backtracking.
std::optional<std::vector<int>> find_isomorphism(const Graph& g, const Graph& h);

bool is_isomorphic(const Graph& g, const Graph& h);

}  // namespace cospec

#endif  // COSPEC_GRAPH_HPP
