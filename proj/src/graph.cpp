#include "cospec/graph.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <random>
#include <sstream>

namespace cospec {

Graph::Graph(int n) : n_(n), rows_(static_cast<std::size_t>(std::max(n, 0)), 0u) {
  if (n < 1 || n > kMaxVertices)
    throw std::invalid_argument("Graph: order must be between 1 and 32");
}

void Graph::set_edge(int i, int j, bool present) {
  if (i < 0 || j < 0 || i >= n_ || j >= n_ || i == j)
    throw std::invalid_argument("Graph::set_edge: invalid vertex pair");
  if (present) {
    rows_[i] |= 1u << j;
    rows_[j] |= 1u << i;
  } else {
    rows_[i] &= ~(1u << j);
    rows_[j] &= ~(1u << i);
  }
}

int Graph::degree(int i) const { return std::popcount(rows_[i]); }

int Graph::edge_count() const {
  int total = 0;
  for (int i = 0; i < n_; ++i) total += degree(i);
  return total / 2;
}

IntMatrix Graph::adjacency_matrix() const {
  IntMatrix a = IntMatrix::Zero(n_, n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if (has_edge(i, j)) a(i, j) = 1;
  return a;
}

Graph6ParseError::Graph6ParseError(const std::string& message, std::size_t offset)
    : std::runtime_error(message + " (offset " + std::to_string(offset) + ")"),
      offset_(offset) {}

Graph parse_graph6(std::string_view record) {
  if (record.empty()) throw Graph6ParseError("graph6: empty record", 0);
  const unsigned char header = static_cast<unsigned char>(record[0]);
  if (header == 126)
    throw Graph6ParseError("graph6: vertex count exceeds supported maximum of 32", 0);
  if (header < 63 || header > 125)
    throw Graph6ParseError("graph6: header byte out of range", 0);
  const int n = header - 63;
  if (n < 1) throw Graph6ParseError("graph6: empty graph not supported", 0);
  if (n > Graph::kMaxVertices)
    throw Graph6ParseError("graph6: vertex count exceeds supported maximum of 32", 0);

  const std::size_t nbits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t nbytes = (nbits + 5) / 6;
  if (record.size() < 1 + nbytes)
    throw Graph6ParseError("graph6: truncated bit field", record.size());
  if (record.size() > 1 + nbytes)
    throw Graph6ParseError("graph6: trailing data after record", 1 + nbytes);

  Graph g(n);
  std::size_t bit = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      const std::size_t at = 1 + bit / 6;
      const unsigned char b = static_cast<unsigned char>(record[at]);
      if (b < 63 || b > 126) throw Graph6ParseError("graph6: byte out of range", at);
      if ((b - 63) >> (5 - bit % 6) & 1) g.set_edge(i, j);
    }
  }
  // Padding bits of a canonical record are zero.
  for (std::size_t pad = nbits; pad < nbytes * 6; ++pad) {
    const std::size_t at = 1 + pad / 6;
    const unsigned char b = static_cast<unsigned char>(record[at]);
    if (b < 63 || b > 126) throw Graph6ParseError("graph6: byte out of range", at);
    if ((b - 63) >> (5 - pad % 6) & 1)
      throw Graph6ParseError("graph6: nonzero padding bits", at);
  }
  return g;
}

std::string write_graph6(const Graph& g) {
  const int n = g.order();
  const std::size_t nbits = static_cast<std::size_t>(n) * (n - 1) / 2;
  std::string out(1 + (nbits + 5) / 6, static_cast<char>(63));
  out[0] = static_cast<char>(63 + n);
  std::size_t bit = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++bit)
      if (g.has_edge(i, j)) out[1 + bit / 6] += 1 << (5 - bit % 6);
  return out;
}

Graph parse_adjacency_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  int n = 0;
  if (!(in >> n)) throw std::invalid_argument("adjacency text: missing vertex count");
  if (n < 1 || n > Graph::kMaxVertices)
    throw std::invalid_argument("adjacency text: order must be between 1 and 32");
  IntMatrix a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int v = 0;
      if (!(in >> v)) throw std::invalid_argument("adjacency text: truncated matrix");
      a(i, j) = v;
    }
  return graph_from_adjacency(a);
}

std::string write_adjacency_text(const Graph& g) {
  std::ostringstream out;
  out << g.order() << '\n';
  for (int i = 0; i < g.order(); ++i) {
    for (int j = 0; j < g.order(); ++j) {
      if (j) out << ' ';
      out << (g.has_edge(i, j) ? 1 : 0);
    }
    out << '\n';
  }
  return out.str();
}

Graph graph_from_adjacency(const IntMatrix& a) {
  if (a.rows() != a.cols() || a.rows() < 1)
    throw std::invalid_argument("graph_from_adjacency: matrix must be square");
  const int n = static_cast<int>(a.rows());
  Graph g(n);
  for (int i = 0; i < n; ++i) {
    if (a(i, i) != 0)
      throw std::invalid_argument("graph_from_adjacency: nonzero diagonal");
    for (int j = i + 1; j < n; ++j) {
      if (a(i, j) != a(j, i))
        throw std::invalid_argument("graph_from_adjacency: matrix not symmetric");
      if (a(i, j) != 0 && a(i, j) != 1)
        throw std::invalid_argument("graph_from_adjacency: entries must be 0 or 1");
      if (a(i, j) == 1) g.set_edge(i, j);
    }
  }
  return g;
}

Graph complement(const Graph& g) {
  Graph c(g.order());
  for (int i = 0; i < g.order(); ++i)
    for (int j = i + 1; j < g.order(); ++j)
      if (!g.has_edge(i, j)) c.set_edge(i, j);
  return c;
}

Graph random_graph(int n, std::uint64_t seed) {
  Graph g(n);
  std::mt19937_64 rng(seed);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rng() & 1u) g.set_edge(i, j);
  return g;
}

Graph relabel(const Graph& g, const std::vector<int>& perm) {
  const int n = g.order();
  if (static_cast<int>(perm.size()) != n)
    throw std::invalid_argument("relabel: permutation size mismatch");
  Graph h(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (g.has_edge(i, j)) h.set_edge(perm[i], perm[j]);
  return h;
}

namespace {

// Iterated neighborhood refinement (1-dimensional Weisfeiler-Leman) run on
// both graphs with a shared color dictionary, so colors are comparable
// across the two graphs.
std::pair<std::vector<int>, std::vector<int>> refine_pair(const Graph& g, const Graph& h) {
  const int n = g.order();
  std::vector<int> cg(n), ch(n);
  for (int i = 0; i < n; ++i) {
    cg[i] = g.degree(i);
    ch[i] = h.degree(i);
  }
  auto signature = [n](const Graph& x, const std::vector<int>& colors, int i) {
    std::vector<int> neigh;
    for (int j = 0; j < n; ++j)
      if (x.has_edge(i, j)) neigh.push_back(colors[j]);
    std::sort(neigh.begin(), neigh.end());
    return neigh;
  };
  std::size_t classes = 0;
  for (int round = 0; round < n; ++round) {
    std::map<std::pair<int, std::vector<int>>, int> ids;
    std::vector<int> ng(n), nh(n);
    auto id_of = [&ids](std::pair<int, std::vector<int>> key) {
      auto [it, ignored] = ids.emplace(std::move(key), static_cast<int>(ids.size()));
      return it->second;
    };
    for (int i = 0; i < n; ++i) ng[i] = id_of({cg[i], signature(g, cg, i)});
    for (int i = 0; i < n; ++i) nh[i] = id_of({ch[i], signature(h, ch, i)});
    cg = std::move(ng);
    ch = std::move(nh);
    if (ids.size() == classes) break;  // partition is stable
    classes = ids.size();
  }
  return {cg, ch};
}

bool extend_mapping(const Graph& g, const Graph& h, const std::vector<int>& cg,
                    const std::vector<int>& ch, const std::vector<int>& order,
                    std::size_t depth, std::vector<int>& map, std::uint32_t& used) {
  if (depth == order.size()) return true;
  const int u = order[depth];
  for (int v = 0; v < h.order(); ++v) {
    if ((used >> v) & 1u) continue;
    if (cg[u] != ch[v]) continue;
    bool ok = true;
    for (std::size_t k = 0; k < depth && ok; ++k) {
      const int w = order[k];
      if (g.has_edge(u, w) != h.has_edge(v, map[w])) ok = false;
    }
    if (!ok) continue;
    map[u] = v;
    used |= 1u << v;
    if (extend_mapping(g, h, cg, ch, order, depth + 1, map, used)) return true;
    used &= ~(1u << v);
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const Graph& g, const Graph& h) {
  if (g.order() != h.order()) return std::nullopt;
  const int n = g.order();

  auto [cg, ch] = refine_pair(g, h);
  std::vector<int> sg = cg, sh = ch;
  std::sort(sg.begin(), sg.end());
  std::sort(sh.begin(), sh.end());
  if (sg != sh) return std::nullopt;

  // Match rare colors first to keep the search tree narrow.
  std::map<int, int> class_size;
  for (int c : cg) ++class_size[c];
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (class_size[cg[a]] != class_size[cg[b]]) return class_size[cg[a]] < class_size[cg[b]];
    return a < b;
  });

  std::vector<int> map(n, -1);
  std::uint32_t used = 0;
  if (extend_mapping(g, h, cg, ch, order, 0, map, used)) return map;
  return std::nullopt;
}

bool is_isomorphic(const Graph& g, const Graph& h) {
  return find_isomorphism(g, h).has_value();
}

}  // namespace cospec
