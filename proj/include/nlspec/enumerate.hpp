// enumerate.hpp — isomorph-free exhaustive generation of small graphs by
// canonical augmentation: extend a canonical parent by one vertex, keep a
// child only when its canonical deletion vertex reproduces that parent, so
// no cross-level dedup table is needed.
#pragma once

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "nlspec/canonical.hpp"
#include "nlspec/graph.hpp"
#include "nlspec/graph6.hpp"

namespace nlspec {

struct EnumFilter {
  int n = 1;
  bool connected_only = false;
  std::optional<int> min_degree;
  std::optional<int> max_degree;
};

struct EnumOptions {
  bool allow_large = false;  // permit n in 11..12
  int threads = 1;
};

inline constexpr int kEnumCap = 10;
inline constexpr int kEnumOverrideCap = 12;

inline void validate_filter(const EnumFilter& f, const EnumOptions& opts) {
  if (f.n < 1) throw std::invalid_argument("enumeration requires n >= 1");
  const int cap = opts.allow_large ? kEnumOverrideCap : kEnumCap;
  if (f.n > cap) {
    throw std::invalid_argument("enumeration capped at n = " + std::to_string(cap) +
                                (opts.allow_large ? "" : " (override flag raises it to 12)"));
  }
  const int lo = f.min_degree.value_or(0);
  const int hi = f.max_degree.value_or(f.n - 1);
  if (lo < 0 || hi > f.n - 1 || lo > hi) {
    throw std::invalid_argument("inconsistent degree bounds");
  }
}

namespace enum_detail {

struct Node {
  int k = 0;
  std::array<uint64_t, 12> rows{};   // canonical representative adjacency
  std::array<uint64_t, 2> words{};   // its canonical triangle bits
};

inline bool connected_without(int n, const uint64_t* rows, int skip) {
  const uint64_t all = ((n == 64 ? 0 : 1ULL << n) - 1) & ~(1ULL << skip);
  if (all == 0) return true;
  const int start = std::countr_zero(all);
  uint64_t seen = 1ULL << start;
  uint64_t frontier = seen;
  while (frontier) {
    uint64_t next = 0;
    while (frontier) {
      const int v = std::countr_zero(frontier);
      frontier &= frontier - 1;
      next |= rows[v];
    }
    next &= all;
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == all;
}

// Expands `node` level by level up to f.n; calls sink(child_node) for every
// accepted graph at level f.n. Degree upper bounds prune mid-recursion
// (induced subgraphs cannot exceed the final maximum degree); the lower
// bound is the caller's concern at emission.
template <typename Sink>
void expand(const Node& node, const EnumFilter& f, Sink&& sink) {
  if (node.k == f.n) {
    sink(node);
    return;
  }
  const int k = node.k;
  const int nk = k + 1;
  const int max_deg = f.max_degree.value_or(f.n - 1);
  const uint64_t first_mask = f.connected_only ? 1 : 0;
  const uint64_t last_mask = (1ULL << k) - 1;

  std::vector<std::array<uint64_t, 2>> seen;  // child canonical keys, sorted
  seen.reserve(64);
  canon::Result res;
  uint64_t child[13];
  uint64_t deleted[13];

  for (uint64_t mask = first_mask; mask <= last_mask; ++mask) {
    if (std::popcount(mask) > max_deg) continue;
    bool pruned = false;
    for (int i = 0; i < k; ++i) {
      child[i] = node.rows[i] | (((mask >> i) & 1) << k);
      if (std::popcount(child[i]) > max_deg) {
        pruned = true;
        break;
      }
    }
    if (pruned) continue;
    child[k] = mask;

    canon::canonicalize(nk, child, res);
    const std::array<uint64_t, 2> key{res.words[0], res.words[1]};
    const auto it = std::lower_bound(seen.begin(), seen.end(), key);
    if (it != seen.end() && *it == key) continue;
    seen.insert(it, key);

    // Canonical deletion vertex: highest canonical label whose removal is a
    // valid parent (in connected mode that means it is not a cut vertex).
    int w = -1;
    for (int label = nk - 1; label >= 0; --label) {
      const int u = res.vertex_at[label];
      if (f.connected_only && !connected_without(nk, child, u)) continue;
      w = u;
      break;
    }
    if (w != k) {
      // Delete w and compare against the parent's canonical form.
      for (int i = 0, o = 0; i < nk; ++i) {
        if (i == w) continue;
        const uint64_t bits = child[i];
        const uint64_t low = bits & ((1ULL << w) - 1);
        deleted[o++] = low | ((bits >> (w + 1)) << w);
      }
      canon::Result del;
      canon::canonicalize(k, deleted, del);
      if (del.words[0] != node.words[0] || del.words[1] != node.words[1]) continue;
    }

    Node next;
    next.k = nk;
    next.words = key;
    for (int a = 0; a < nk; ++a) {
      uint64_t rowbits = 0;
      const uint64_t src = child[res.vertex_at[a]];
      for (int b = 0; b < nk; ++b) {
        rowbits |= ((src >> res.vertex_at[b]) & 1ULL) << b;
      }
      next.rows[a] = rowbits;
    }
    expand(next, f, sink);
  }
}

inline Node root() {
  Node node;
  node.k = 1;
  return node;
}

inline bool emit_ok(const Node& node, const EnumFilter& f) {
  if (f.min_degree) {
    for (int v = 0; v < node.k; ++v) {
      if (std::popcount(node.rows[v]) < *f.min_degree) return false;
    }
  }
  return true;
}

inline Graph node_graph(const Node& node) {
  return Graph::from_rows(node.k, std::span<const uint64_t>(node.rows.data(),
                                                            static_cast<size_t>(node.k)));
}

// States at a fixed level, used to fan subtrees out to workers.
inline std::vector<Node> level_states(const EnumFilter& f, int level) {
  EnumFilter tof = f;
  tof.n = level;
  tof.min_degree.reset();  // degrees still grow below the final level
  std::vector<Node> states;
  expand(root(), tof, [&](const Node& node) { states.push_back(node); });
  return states;
}

template <typename PerState, typename Merge>
void run_split(const EnumFilter& f, const EnumOptions& opts, PerState per_state, Merge merge) {
  const int threads = std::max(1, opts.threads);
  const int split = f.n - 3;
  if (threads == 1 || split < 2) {
    EnumFilter sub = f;
    const Node seed = root();
    merge(0, per_state(seed, sub));
    return;
  }
  std::vector<Node> states = level_states(f, split);
  std::vector<decltype(per_state(states[0], f))> slots(states.size());
  std::atomic<size_t> cursor{0};
  auto worker = [&]() {
    while (true) {
      const size_t i = cursor.fetch_add(1);
      if (i >= states.size()) break;
      slots[i] = per_state(states[i], f);
    }
  };
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  for (size_t i = 0; i < slots.size(); ++i) merge(i, std::move(slots[i]));
}

}  // namespace enum_detail

// Sequential deterministic visit (depth-first augmentation order, not
// sorted); the collecting drivers below honor opts.threads.
template <typename Visit>
void for_each_graph(const EnumFilter& f, const EnumOptions& opts, Visit&& visit) {
  validate_filter(f, opts);
  enum_detail::expand(enum_detail::root(), f, [&](const enum_detail::Node& node) {
    if (enum_detail::emit_ok(node, f)) visit(enum_detail::node_graph(node));
  });
}

inline uint64_t count_graphs(const EnumFilter& f, const EnumOptions& opts = {}) {
  validate_filter(f, opts);
  uint64_t total = 0;
  enum_detail::run_split(
      f, opts,
      [](const enum_detail::Node& seed, const EnumFilter& filter) {
        uint64_t count = 0;
        enum_detail::expand(seed, filter, [&](const enum_detail::Node& node) {
          count += enum_detail::emit_ok(node, filter);
        });
        return count;
      },
      [&](size_t, uint64_t part) { total += part; });
  return total;
}

// One representative per isomorphism class, sorted by canonical graph6.
inline std::vector<CanonicalGraph> enumerate_graphs(const EnumFilter& f,
                                                    const EnumOptions& opts = {}) {
  validate_filter(f, opts);
  std::vector<CanonicalGraph> out;
  enum_detail::run_split(
      f, opts,
      [](const enum_detail::Node& seed, const EnumFilter& filter) {
        std::vector<CanonicalGraph> part;
        enum_detail::expand(seed, filter, [&](const enum_detail::Node& node) {
          if (!enum_detail::emit_ok(node, filter)) return;
          Graph g = enum_detail::node_graph(node);
          std::string g6 = graph6_encode(g);
          part.push_back(CanonicalGraph{std::move(g6), std::move(g)});
        });
        return part;
      },
      [&](size_t, std::vector<CanonicalGraph> part) {
        out.insert(out.end(), std::make_move_iterator(part.begin()),
                   std::make_move_iterator(part.end()));
      });
  std::sort(out.begin(), out.end(),
            [](const CanonicalGraph& a, const CanonicalGraph& b) { return a.g6 < b.g6; });
  return out;
}

// Canonical graph6 lines only (compact form for export and large n).
inline std::vector<std::string> enumerate_g6(const EnumFilter& f, const EnumOptions& opts = {}) {
  validate_filter(f, opts);
  std::vector<std::string> out;
  enum_detail::run_split(
      f, opts,
      [](const enum_detail::Node& seed, const EnumFilter& filter) {
        std::vector<std::string> part;
        enum_detail::expand(seed, filter, [&](const enum_detail::Node& node) {
          if (enum_detail::emit_ok(node, filter)) {
            part.push_back(graph6_encode(enum_detail::node_graph(node)));
          }
        });
        return part;
      },
      [&](size_t, std::vector<std::string> part) {
        out.insert(out.end(), std::make_move_iterator(part.begin()),
                   std::make_move_iterator(part.end()));
      });
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace nlspec
