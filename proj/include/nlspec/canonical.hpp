// canonical.hpp — canonical labeling: iterative degree/neighborhood
// refinement, then backtracking over the remaining cells for the
// lexicographically smallest adjacency bitstring (graph6 bit order).
// Isomorphic graphs yield byte-equal canonical graph6 strings.
#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstring>
#include <string>

#include "nlspec/graph.hpp"
#include "nlspec/graph6.hpp"

namespace nlspec {

namespace canon {

struct Result {
  int n = 0;
  int word_count = 0;                   // ceil(n(n-1)/2 / 64)
  std::array<uint64_t, 32> words{};     // triangle bits, MSB-first within a word
  std::array<uint8_t, 64> vertex_at{};  // vertex_at[label] = input vertex

  bool same_graph(const Result& o) const {
    if (n != o.n) return false;
    for (int w = 0; w < word_count; ++w) {
      if (words[w] != o.words[w]) return false;
    }
    return true;
  }

  bool words_less(const Result& o) const {
    for (int w = 0; w < word_count; ++w) {
      if (words[w] != o.words[w]) return words[w] < o.words[w];
    }
    return false;
  }
};

namespace detail {

class Search {
 public:
  Search(int n, const uint64_t* rows) : n_(n), rows_(rows) {}

  void run(Result& out) {
    out.n = n_;
    out.word_count = (n_ * (n_ - 1) / 2 + 63) / 64;
    out.words.fill(0);
    if (n_ == 0) return;
    best_ = &out;
    have_best_ = false;
    uint8_t colors[64];
    std::memset(colors, 0, sizeof(colors));
    descend(colors);
  }

 private:
  // One pass of signature sorting; repeats until the cell count is stable.
  // Signature = (current color, per-color neighbor counts); new colors are
  // ranks in sorted signature order, so they refine the old partition and
  // the cell order is isomorphism-invariant.
  int refine(uint8_t* colors) const {
    int ncolors = 0;
    for (int v = 0; v < n_; ++v) ncolors = std::max(ncolors, colors[v] + 1);
    while (true) {
      const int width = ncolors + 1;
      uint8_t sig[64][65];
      for (int v = 0; v < n_; ++v) {
        std::memset(sig[v], 0, static_cast<size_t>(width));
        sig[v][0] = colors[v];
        uint64_t bits = rows_[v];
        while (bits) {
          const int u = std::countr_zero(bits);
          bits &= bits - 1;
          ++sig[v][1 + colors[u]];
        }
      }
      int order[64];
      for (int v = 0; v < n_; ++v) order[v] = v;
      std::sort(order, order + n_, [&](int a, int b) {
        return std::memcmp(sig[a], sig[b], static_cast<size_t>(width)) < 0;
      });
      int next = 0;
      uint8_t newcolors[64];
      newcolors[order[0]] = 0;
      for (int i = 1; i < n_; ++i) {
        if (std::memcmp(sig[order[i]], sig[order[i - 1]], static_cast<size_t>(width)) != 0) {
          ++next;
        }
        newcolors[order[i]] = static_cast<uint8_t>(next);
      }
      const int count = next + 1;
      std::memcpy(colors, newcolors, static_cast<size_t>(n_));
      if (count == ncolors) return count;
      ncolors = count;
    }
  }

  void descend(uint8_t* colors) {
    const int ncolors = refine(colors);
    if (ncolors == n_) {
      evaluate_leaf(colors);
      return;
    }
    // First cell with more than one vertex, in color order.
    int cell = -1;
    int members[64];
    int count = 0;
    for (int c = 0; c < ncolors && cell < 0; ++c) {
      count = 0;
      for (int v = 0; v < n_; ++v) {
        if (colors[v] == c) members[count++] = v;
      }
      if (count >= 2) cell = c;
    }
    // Twin vertices (equal rows outside the pair) are swappable by an
    // automorphism, so one branch per twin class suffices.
    int reps[64];
    int nreps = 0;
    for (int i = 0; i < count; ++i) {
      const int u = members[i];
      bool dup = false;
      for (int r = 0; r < nreps && !dup; ++r) {
        const int v = reps[r];
        const uint64_t mask = ~((1ULL << u) | (1ULL << v));
        dup = (rows_[u] & mask) == (rows_[v] & mask);
      }
      if (!dup) reps[nreps++] = u;
    }
    for (int r = 0; r < nreps; ++r) {
      const int u = reps[r];
      uint8_t child[64];
      for (int v = 0; v < n_; ++v) {
        child[v] = static_cast<uint8_t>(colors[v] + (colors[v] > cell ? 1 : 0));
        if (colors[v] == cell && v != u) child[v] = static_cast<uint8_t>(cell + 1);
      }
      child[u] = static_cast<uint8_t>(cell);
      descend(child);
    }
  }

  void evaluate_leaf(const uint8_t* colors) {
    uint8_t vertex_at[64];
    for (int v = 0; v < n_; ++v) vertex_at[colors[v]] = static_cast<uint8_t>(v);
    uint64_t words[32];
    const int word_count = best_->word_count;
    std::memset(words, 0, sizeof(uint64_t) * static_cast<size_t>(word_count == 0 ? 1 : word_count));
    int t = 0;
    bool decided = false;  // true once strictly smaller than the best so far
    for (int j = 1; j < n_; ++j) {
      const uint64_t rowbits = rows_[vertex_at[j]];
      for (int i = 0; i < j; ++i, ++t) {
        if ((rowbits >> vertex_at[i]) & 1) words[t >> 6] |= 1ULL << (63 - (t & 63));
        if ((t & 63) == 63 && have_best_ && !decided) {
          const uint64_t bw = best_->words[t >> 6];
          if (words[t >> 6] > bw) return;  // prefix already worse
          if (words[t >> 6] < bw) decided = true;
        }
      }
    }
    if (have_best_ && !decided) {
      for (int w = 0; w < word_count; ++w) {
        if (words[w] != best_->words[w]) {
          if (words[w] > best_->words[w]) return;
          break;
        }
      }
    }
    for (int w = 0; w < word_count; ++w) best_->words[w] = words[w];
    std::memcpy(best_->vertex_at.data(), vertex_at, static_cast<size_t>(n_));
    have_best_ = true;
  }

  int n_;
  const uint64_t* rows_;
  Result* best_ = nullptr;
  bool have_best_ = false;
};

}  // namespace detail

inline void canonicalize(int n, const uint64_t* rows, Result& out) {
  detail::Search(n, rows).run(out);
}

}  // namespace canon

struct CanonicalGraph {
  std::string g6;
  Graph graph;
};

inline CanonicalGraph canonical_form(const Graph& g) {
  canon::Result res;
  canon::canonicalize(g.vertex_count(), g.rows().data(), res);
  std::vector<int> labels(static_cast<size_t>(g.vertex_count()));
  for (int l = 0; l < g.vertex_count(); ++l) labels[res.vertex_at[l]] = l;
  Graph relabeled = g.permuted(labels);
  return CanonicalGraph{graph6_encode(relabeled), std::move(relabeled)};
}

inline std::string canonical_g6(const Graph& g) { return canonical_form(g).g6; }

inline bool isomorphic(const Graph& a, const Graph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  canon::Result ra, rb;
  canon::canonicalize(a.vertex_count(), a.rows().data(), ra);
  canon::canonicalize(b.vertex_count(), b.rows().data(), rb);
  return ra.same_graph(rb);
}

}  // namespace nlspec
