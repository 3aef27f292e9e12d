// structure.hpp — exact evaluation of the three-eigenvalue characterization
// and the structural witness checks, all in rational arithmetic.
#pragma once

#include <bit>
#include <optional>
#include <stdexcept>
#include <vector>

#include "nlspec/graph.hpp"
#include "nlspec/numbers.hpp"

namespace nlspec {

// d_hat(u) = sum over neighbors v of 1/d_v, held for every vertex;
// lambda_hat (adjacent pairs) and mu_hat (non-adjacent pairs) are the
// common-neighborhood sums, computed per pair on demand since the pair
// table is the memory hot spot.
class StructureProfile {
 public:
  explicit StructureProfile(Graph g) : graph_(std::move(g)) {
    if (graph_.vertex_count() < 2 || !graph_.is_connected()) {
      throw std::invalid_argument("structure_profile requires a connected graph on >= 2 vertices");
    }
    d_hat_.resize(static_cast<size_t>(graph_.vertex_count()));
    for (int v = 0; v < graph_.vertex_count(); ++v) {
      d_hat_[static_cast<size_t>(v)] = common_sum(graph_.row(v));
    }
  }

  const Graph& graph() const { return graph_; }
  const Rational& d_hat(int v) const { return d_hat_.at(static_cast<size_t>(v)); }

  Rational lambda_hat(int u, int v) const {
    if (!graph_.adjacent(u, v)) {
      throw std::invalid_argument("lambda_hat requires an adjacent pair");
    }
    return common_sum(graph_.row(u) & graph_.row(v));
  }

  Rational mu_hat(int u, int v) const {
    if (u == v || graph_.adjacent(u, v)) {
      throw std::invalid_argument("mu_hat requires a distinct non-adjacent pair");
    }
    return common_sum(graph_.row(u) & graph_.row(v));
  }

 private:
  Rational common_sum(uint64_t bits) const {
    Rational sum(0);
    while (bits) {
      const int w = std::countr_zero(bits);
      bits &= bits - 1;
      sum += make_rational(1, graph_.degree(w));
    }
    return sum;
  }

  Graph graph_;
  std::vector<Rational> d_hat_;
};

inline StructureProfile structure_profile(const Graph& g) { return StructureProfile(g); }

struct Violation {
  int condition = 0;  // three-eigenvalue: 1..3 per equation, 0 = degenerate
                      // two-eigenvalue complete graph; witness check: 1..5
  int u = -1;
  int v = -1;
  Rational lhs;
  Rational rhs;
};

struct CheckReport {
  bool passed = true;
  std::optional<Violation> violation;
};

// Exact test of the three-property characterization of the eigenvalue set
// {0, 1/q, 1+1/q}. The defining identities also hold for K_{q+1}, which has
// only the two distinct eigenvalues {0, 1+1/q}; that degenerate case is
// excluded so "passed" matches the distinct-root set exactly.
inline CheckReport three_eigenvalue_check(const Graph& g, int q) {
  if (q < 2) throw std::invalid_argument("three_eigenvalue_check requires q >= 2");
  const StructureProfile profile(g);
  const int n = g.vertex_count();
  const Rational two_m(2 * g.edge_count());
  const Rational qq(static_cast<long>(q) * q);
  const Rational coupling = make_rational(q + 1, 1) / (two_m * qq);  // (q+1)/(2m q^2)

  for (int u = 0; u < n; ++u) {
    const Rational d(g.degree(u));
    const Rational rhs = coupling * d * d + make_rational(q - 1, 1) * d / qq;
    if (profile.d_hat(u) != rhs) {
      return {false, Violation{1, u, -1, profile.d_hat(u), rhs}};
    }
  }
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (!g.adjacent(u, v)) continue;
      const Rational rhs =
          coupling * Rational(g.degree(u)) * Rational(g.degree(v)) + make_rational(q - 2, q);
      const Rational lhs = profile.lambda_hat(u, v);
      if (lhs != rhs) return {false, Violation{2, u, v, lhs, rhs}};
    }
  }
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (g.adjacent(u, v)) continue;
      const Rational rhs = coupling * Rational(g.degree(u)) * Rational(g.degree(v));
      const Rational lhs = profile.mu_hat(u, v);
      if (lhs != rhs) return {false, Violation{3, u, v, lhs, rhs}};
    }
  }
  if (g.edge_count() == static_cast<long>(n) * (n - 1) / 2) {
    return {false, Violation{0, -1, -1, Rational(2), Rational(3)}};
  }
  return {};
}

// Structural conclusions for a graph that is supposed to share Sp(F_{p,q}):
// connected, pq+1 vertices, 2 <= delta <= q+1, a single vertex of degree pq
// with all others of degree q, and 2m = pq(q+1).
inline CheckReport lemma_witness_check(const Graph& g, int p, int q) {
  if (p < 2 || q < 2) throw std::invalid_argument("lemma_witness_check requires p,q >= 2");
  const int n = g.vertex_count();
  if (!g.is_connected()) {
    return {false, Violation{1, -1, -1, Rational(g.component_count()), Rational(1)}};
  }
  if (n != p * q + 1) {
    return {false, Violation{2, -1, -1, Rational(n), Rational(p * q + 1)}};
  }
  const int delta = g.min_degree();
  if (delta < 2) return {false, Violation{3, -1, -1, Rational(delta), Rational(2)}};
  if (delta > q + 1) return {false, Violation{3, -1, -1, Rational(delta), Rational(q + 1)}};
  int hubs = 0;
  for (int v = 0; v < n; ++v) {
    const int d = g.degree(v);
    if (d == p * q) {
      ++hubs;
    } else if (d != q) {
      return {false, Violation{4, v, -1, Rational(d), Rational(q)}};
    }
  }
  if (hubs != 1) return {false, Violation{4, -1, -1, Rational(hubs), Rational(1)}};
  if (2 * g.edge_count() != static_cast<long>(p) * q * (q + 1)) {
    return {false,
            Violation{5, -1, -1, Rational(2 * g.edge_count()),
                      Rational(static_cast<long>(p) * q * (q + 1))}};
  }
  return {};
}

}  // namespace nlspec
