// graph.hpp — immutable simple undirected graphs on up to 64 vertices,
// stored as bit-adjacency rows, plus constructors for the named families.
#pragma once

#include <bit>
#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace nlspec {

class Graph {
 public:
  static constexpr int kMaxVertices = 64;

  Graph() = default;  // empty graph, n = 0

  Graph(int n, std::span<const std::pair<int, int>> edges) {
    init(n);
    for (auto [u, v] : edges) add_edge(u, v);
    finish();
  }

  Graph(int n, std::initializer_list<std::pair<int, int>> edges)
      : Graph(n, std::span<const std::pair<int, int>>(edges.begin(), edges.size())) {}

  static Graph from_rows(int n, std::span<const uint64_t> rows) {
    Graph g;
    g.init(n);
    if (static_cast<int>(rows.size()) != n) {
      throw std::invalid_argument("from_rows: row count does not match n");
    }
    const uint64_t valid = n == 64 ? ~0ULL : ((1ULL << n) - 1);
    for (int v = 0; v < n; ++v) {
      if (rows[v] & ~valid) throw std::invalid_argument("from_rows: bit out of range");
      if (rows[v] >> v & 1) throw std::invalid_argument("from_rows: self-loop");
      g.adj_[v] = rows[v];
    }
    for (int v = 0; v < n; ++v) {
      for (int u = v + 1; u < n; ++u) {
        if (((g.adj_[v] >> u) & 1) != ((g.adj_[u] >> v) & 1)) {
          throw std::invalid_argument("from_rows: adjacency not symmetric");
        }
      }
    }
    g.finish();
    return g;
  }

  int vertex_count() const { return n_; }
  long edge_count() const { return m_; }
  int degree(int v) const { return deg_.at(static_cast<size_t>(v)); }
  const std::vector<int>& degrees() const { return deg_; }
  int min_degree() const { return delta_; }
  int max_degree() const { return max_deg_; }
  uint64_t row(int v) const { return adj_.at(static_cast<size_t>(v)); }
  const std::vector<uint64_t>& rows() const { return adj_; }

  bool adjacent(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return (adj_[static_cast<size_t>(u)] >> v) & 1;
  }

  bool is_connected() const {
    if (n_ <= 1) return true;
    return reach_from(0) == all_mask();
  }

  int component_count() const {
    uint64_t seen = 0;
    int count = 0;
    const uint64_t all = all_mask();
    while (seen != all) {
      const int v = std::countr_zero(~seen & all);
      seen |= reach_from(v);
      ++count;
    }
    return count;
  }

  int isolated_count() const {
    int count = 0;
    for (int v = 0; v < n_; ++v) count += (adj_[static_cast<size_t>(v)] == 0);
    return count;
  }

  // labels[v] = new label of vertex v; labels must be a permutation of 0..n-1.
  Graph permuted(std::span<const int> labels) const {
    if (static_cast<int>(labels.size()) != n_) {
      throw std::invalid_argument("permuted: label vector has wrong size");
    }
    std::vector<bool> used(static_cast<size_t>(n_), false);
    for (int v = 0; v < n_; ++v) {
      const int l = labels[static_cast<size_t>(v)];
      if (l < 0 || l >= n_ || used[static_cast<size_t>(l)]) {
        throw std::invalid_argument("permuted: not a permutation");
      }
      used[static_cast<size_t>(l)] = true;
    }
    Graph g;
    g.init(n_);
    for (int v = 0; v < n_; ++v) {
      uint64_t bits = adj_[static_cast<size_t>(v)];
      while (bits) {
        const int u = std::countr_zero(bits);
        bits &= bits - 1;
        g.adj_[static_cast<size_t>(labels[static_cast<size_t>(v)])] |=
            1ULL << labels[static_cast<size_t>(u)];
      }
    }
    g.finish();
    return g;
  }

  Graph induced_without(int v) const {
    check_vertex(v);
    Graph g;
    g.init(n_ - 1);
    for (int i = 0; i < n_; ++i) {
      if (i == v) continue;
      const uint64_t bits = adj_[static_cast<size_t>(i)];
      const uint64_t low = bits & ((1ULL << v) - 1);
      const uint64_t high = v == 63 ? 0 : (bits >> (v + 1)) << v;
      g.adj_[static_cast<size_t>(i < v ? i : i - 1)] = low | high;
    }
    g.finish();
    return g;
  }

  bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

 private:
  friend Graph disjoint_union(const Graph&, const Graph&);
  friend Graph join(const Graph&, const Graph&);

  void init(int n) {
    if (n < 0 || n > kMaxVertices) {
      throw std::invalid_argument("graph order must be in 0..64, got " + std::to_string(n));
    }
    n_ = n;
    adj_.assign(static_cast<size_t>(n), 0);
  }

  void add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    adj_[static_cast<size_t>(u)] |= 1ULL << v;
    adj_[static_cast<size_t>(v)] |= 1ULL << u;
  }

  void finish() {
    deg_.resize(static_cast<size_t>(n_));
    long total = 0;
    delta_ = n_ == 0 ? 0 : kMaxVertices + 1;
    max_deg_ = 0;
    for (int v = 0; v < n_; ++v) {
      deg_[static_cast<size_t>(v)] = std::popcount(adj_[static_cast<size_t>(v)]);
      total += deg_[static_cast<size_t>(v)];
      delta_ = std::min(delta_, deg_[static_cast<size_t>(v)]);
      max_deg_ = std::max(max_deg_, deg_[static_cast<size_t>(v)]);
    }
    if (n_ == 0) delta_ = 0;
    m_ = total / 2;
  }

  void check_vertex(int v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("vertex index out of range");
  }

  uint64_t all_mask() const { return n_ == 64 ? ~0ULL : (1ULL << n_) - 1; }

  uint64_t reach_from(int start) const {
    uint64_t seen = 1ULL << start;
    uint64_t frontier = seen;
    while (frontier) {
      uint64_t next = 0;
      while (frontier) {
        const int v = std::countr_zero(frontier);
        frontier &= frontier - 1;
        next |= adj_[static_cast<size_t>(v)];
      }
      frontier = next & ~seen;
      seen |= next;
    }
    return seen;
  }

  int n_ = 0;
  std::vector<uint64_t> adj_;
  std::vector<int> deg_;
  long m_ = 0;
  int delta_ = 0;
  int max_deg_ = 0;
};

// ---- graph families ----

inline Graph empty_graph(int n) { return Graph(n, {}); }

inline Graph complete(int n) {
  if (n < 1) throw std::invalid_argument("complete requires n >= 1, got " + std::to_string(n));
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return Graph(n, edges);
}

inline Graph cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle requires n >= 3, got " + std::to_string(n));
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return Graph(n, edges);
}

inline Graph path_graph(int n) {
  if (n < 1) throw std::invalid_argument("path requires n >= 1, got " + std::to_string(n));
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph(n, edges);
}

// Parts 0..r-1 and r..r+s-1.
inline Graph complete_bipartite(int r, int s) {
  if (r < 1 || s < 1) {
    throw std::invalid_argument("complete_bipartite requires r,s >= 1");
  }
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < r; ++u) {
    for (int v = 0; v < s; ++v) edges.emplace_back(u, r + v);
  }
  return Graph(r + s, edges);
}

// K_{1,p}: center 0, leaves 1..p.
inline Graph star(int p) { return complete_bipartite(1, p); }

inline Graph disjoint_union(const Graph& g, const Graph& h) {
  if (g.vertex_count() + h.vertex_count() > Graph::kMaxVertices) {
    throw std::invalid_argument("disjoint_union exceeds the 64-vertex cap");
  }
  Graph out;
  out.init(g.vertex_count() + h.vertex_count());
  const int shift = g.vertex_count();
  for (int v = 0; v < g.vertex_count(); ++v) out.adj_[static_cast<size_t>(v)] = g.row(v);
  for (int v = 0; v < h.vertex_count(); ++v) {
    out.adj_[static_cast<size_t>(shift + v)] = h.row(v) << shift;
  }
  out.finish();
  return out;
}

inline Graph join(const Graph& g, const Graph& h) {
  Graph out = disjoint_union(g, h);
  const int ng = g.vertex_count();
  const int nh = h.vertex_count();
  const uint64_t gmask = ng == 0 ? 0 : (ng == 64 ? ~0ULL : (1ULL << ng) - 1);
  const uint64_t hmask = (nh == 0 ? 0 : (ng + nh == 64 ? ~0ULL : (1ULL << (ng + nh)) - 1)) & ~gmask;
  for (int v = 0; v < ng; ++v) out.adj_[static_cast<size_t>(v)] |= hmask;
  for (int v = ng; v < ng + nh; ++v) out.adj_[static_cast<size_t>(v)] |= gmask;
  out.finish();
  return out;
}

// F_{p,q} = K_1 joined to p disjoint copies of K_q; center is vertex 0,
// copy i of K_q occupies vertices 1+i*q .. (i+1)*q.
inline Graph generalized_friendship(int p, int q) {
  if (p < 1 || q < 1) {
    throw std::invalid_argument("generalized_friendship requires p,q >= 1");
  }
  if (p * q + 1 > Graph::kMaxVertices) {
    throw std::invalid_argument("generalized_friendship exceeds the 64-vertex cap");
  }
  Graph cliques = empty_graph(0);
  for (int i = 0; i < p; ++i) cliques = disjoint_union(cliques, complete(q));
  return join(complete(1), cliques);
}

// Cycle on 2k vertices (labels 0..2k-1) whose vertex 0 is also the center of
// a path on 2k+1 vertices; the two path arms occupy 2k..3k-1 and 3k..4k-1,
// each attached to vertex 0 and extending outward.
inline Graph gamma_graph(int k) {
  if (k < 2) {
    throw std::invalid_argument("gamma_graph requires k >= 2, got " + std::to_string(k));
  }
  if (4 * k > Graph::kMaxVertices) {
    throw std::invalid_argument("gamma_graph exceeds the 64-vertex cap");
  }
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < 2 * k; ++v) edges.emplace_back(v, (v + 1) % (2 * k));
  for (int arm = 0; arm < 2; ++arm) {
    const int base = 2 * k + arm * k;
    edges.emplace_back(0, base);
    for (int i = 0; i + 1 < k; ++i) edges.emplace_back(base + i, base + i + 1);
  }
  return Graph(4 * k, edges);
}

// Dispatcher for the CLI-facing family names.
inline Graph construct_family(const std::string& family, const std::vector<int>& params) {
  auto need = [&](size_t count) {
    if (params.size() != count) {
      throw std::invalid_argument(family + " takes " + std::to_string(count) +
                                  " parameter(s), got " + std::to_string(params.size()));
    }
  };
  if (family == "complete") { need(1); return complete(params[0]); }
  if (family == "cycle") { need(1); return cycle(params[0]); }
  if (family == "path") { need(1); return path_graph(params[0]); }
  if (family == "star") { need(1); return star(params[0]); }
  if (family == "kbip") { need(2); return complete_bipartite(params[0], params[1]); }
  if (family == "fpq") { need(2); return generalized_friendship(params[0], params[1]); }
  if (family == "gamma") { need(1); return gamma_graph(params[0]); }
  if (family == "empty") { need(1); return empty_graph(params[0]); }
  throw std::invalid_argument("unknown graph family: " + family);
}

}  // namespace nlspec
