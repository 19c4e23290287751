// Shared test fixtures: the two 16-vertex reference graphs, their published
// similarity data, and small named graphs.

#ifndef COSPEC_TESTS_FIXTURES_HPP
#define COSPEC_TESTS_FIXTURES_HPP

#include <sstream>
#include <string>
#include <vector>

#include "cospec/graph.hpp"
#include "cospec/numeric.hpp"

namespace cospec::testfix {

inline IntMatrix int_matrix_from_rows(const std::string& text, int n) {
  IntMatrix m(n, n);
  std::istringstream in(text);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      long v = 0;
      in >> v;
      m(i, j) = v;
    }
  return m;
}

inline Graph graph_from_rows(const std::string& text, int n) {
  return graph_from_adjacency(int_matrix_from_rows(text, n));
}

// 16-vertex graph with a generalized cospectral mate (p = 5).
inline Graph example1_graph() {
  return graph_from_rows(R"(
0 1 0 1 1 1 1 0 0 1 1 1 1 1 0 0
1 0 0 1 1 0 0 0 0 0 0 1 0 0 1 1
0 0 0 0 1 1 0 0 0 1 1 1 1 1 0 0
1 1 0 0 1 0 0 1 1 0 0 1 1 0 0 1
1 1 1 1 0 0 0 0 0 0 1 0 0 0 1 1
1 0 1 0 0 0 1 1 1 1 0 0 0 0 0 0
1 0 0 0 0 1 0 0 0 0 1 0 0 1 0 0
0 0 0 1 0 1 0 0 1 1 0 0 0 0 0 0
0 0 0 1 0 1 0 1 0 0 0 0 0 0 0 0
1 0 1 0 0 1 0 1 0 0 1 1 1 0 1 1
1 0 1 0 1 0 1 0 0 1 0 1 0 1 0 1
1 1 1 1 0 0 0 0 0 1 1 0 1 1 0 1
1 0 1 1 0 0 0 0 0 1 0 1 0 0 1 1
1 0 1 0 0 0 1 0 0 0 1 1 0 0 1 0
0 1 0 0 1 0 0 0 0 1 0 0 1 1 0 0
0 1 0 1 1 0 0 0 0 1 1 1 1 0 0 0
)", 16);
}

// The published p-scaled similarity matrix for example 1 (entries of 5Q).
inline IntMatrix example1_qhat() {
  return int_matrix_from_rows(R"(
-1 -1 -1 -1 3 2 2 2 0 0 0 0 0 0 0 0
0 0 0 0 0 0 0 0 5 0 0 0 0 0 0 0
0 0 0 0 0 0 0 0 0 5 0 0 0 0 0 0
0 0 0 0 0 0 0 0 0 0 5 0 0 0 0 0
0 0 0 0 0 0 0 0 0 0 0 5 0 0 0 0
0 0 0 0 0 0 0 0 0 0 0 0 5 0 0 0
-3 2 2 2 -1 1 1 1 0 0 0 0 0 0 0 0
1 1 1 1 2 3 -2 -2 0 0 0 0 0 0 0 0
2 -3 2 2 -1 1 1 1 0 0 0 0 0 0 0 0
1 1 1 1 2 -2 3 -2 0 0 0 0 0 0 0 0
0 0 0 0 0 0 0 0 0 0 0 0 0 5 0 0
0 0 0 0 0 0 0 0 0 0 0 0 0 0 5 0
2 2 -3 2 -1 1 1 1 0 0 0 0 0 0 0 0
2 2 2 -3 -1 1 1 1 0 0 0 0 0 0 0 0
0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 5
1 1 1 1 2 -2 -2 3 0 0 0 0 0 0 0 0
)", 16);
}

// The published mate of example 1 (its adjacency equals Q^T A Q).
inline Graph example1_mate() {
  return graph_from_rows(R"(
0 0 0 1 1 0 0 0 0 1 1 0 0 0 1 1
0 0 0 0 1 0 1 1 0 1 0 0 0 1 1 1
0 0 0 0 0 1 0 0 0 0 0 0 1 1 0 0
1 0 0 0 1 0 0 0 0 0 1 0 1 0 0 0
1 1 0 1 0 0 1 0 1 0 1 1 1 1 1 0
0 0 1 0 0 0 1 0 0 0 1 0 1 0 0 0
0 1 0 0 1 1 0 1 0 1 0 0 1 1 1 1
0 1 0 0 0 0 1 0 1 0 1 1 0 1 1 0
0 0 0 0 1 0 0 1 0 0 1 1 0 0 1 1
1 1 0 0 0 0 1 0 0 0 0 1 1 1 1 0
1 0 0 1 1 1 0 1 1 0 0 1 0 0 1 0
0 0 0 0 1 0 0 1 1 1 1 0 0 1 0 1
0 0 1 1 1 1 1 0 0 1 0 0 0 0 0 0
0 1 1 0 1 0 1 1 0 1 0 1 0 0 1 0
1 1 0 0 1 0 1 1 1 1 1 0 0 1 0 0
1 1 0 0 0 0 1 0 1 0 0 1 0 0 0 0
)", 16);
}

// 16-vertex family member that is determined by its generalized spectrum.
inline Graph example2_graph() {
  return graph_from_rows(R"(
0 1 0 0 1 1 0 1 0 1 0 1 1 1 1 1
1 0 1 0 1 0 0 1 0 0 1 1 0 0 1 0
0 1 0 1 1 0 1 1 1 1 1 0 0 1 0 1
0 0 1 0 1 1 1 0 1 0 1 0 1 1 0 0
1 1 1 1 0 1 1 1 1 0 1 1 1 0 0 1
1 0 0 1 1 0 1 0 0 0 1 0 0 1 0 1
0 0 1 1 1 1 0 0 1 0 0 1 0 0 0 1
1 1 1 0 1 0 0 0 1 1 1 1 0 0 0 0
0 0 1 1 1 0 1 1 0 1 0 0 0 1 0 0
1 0 1 0 0 0 0 1 1 0 0 0 1 1 1 1
0 1 1 1 1 1 0 1 0 0 0 0 0 0 0 1
1 1 0 0 1 0 1 1 0 0 0 0 1 1 1 1
1 0 0 1 1 0 0 0 0 1 0 1 0 1 0 0
1 0 1 1 0 1 0 0 1 1 0 1 1 0 1 0
1 1 0 0 0 0 0 0 0 1 0 1 0 1 0 0
1 0 1 0 1 1 1 0 0 1 1 1 0 0 0 0
)", 16);
}

// 4x4 primitive matrix of level 3, scaled by 3.
inline IntMatrix level3_qhat() {
  return int_matrix_from_rows(R"(
-1 2 0 2
0 0 3 0
2 -1 0 2
2 2 0 -1
)", 4);
}

// 6x6 p-scaled primitive matrix assembled from the representatives of
// v = (2,2,2,1,1,1) and 2v at p = 3.
inline IntMatrix six_vertex_qhat() {
  return int_matrix_from_rows(R"(
2 -1 -1 1 1 1
-1 2 -1 1 1 1
-1 -1 2 1 1 1
1 1 1 2 -1 -1
1 1 1 -1 2 -1
1 1 1 -1 -1 2
)", 6);
}

inline Graph path_graph(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.set_edge(i, i + 1);
  return g;
}

inline Graph complete_graph(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.set_edge(i, j);
  return g;
}

}  // namespace cospec::testfix

#endif  // COSPEC_TESTS_FIXTURES_HPP
