// graph6.hpp — graph6 interchange format, bit-exact per McKay's formats.txt:
// 6-bit groups offset by 63, upper triangle column-major, zero padding.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "nlspec/graph.hpp"

namespace nlspec {

class Graph6Error : public std::runtime_error {
 public:
  Graph6Error(const std::string& what, size_t offset)
      : std::runtime_error("graph6: " + what + " (byte offset " + std::to_string(offset) + ")"),
        offset_(offset) {}
  size_t offset() const { return offset_; }

 private:
  size_t offset_;
};

inline std::string graph6_encode(const Graph& g) {
  const int n = g.vertex_count();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else {
    // Long form N(n) = 126 followed by three 6-bit groups of an 18-bit n.
    out.push_back(static_cast<char>(126));
    out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
    out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
    out.push_back(static_cast<char>(63 + (n & 63)));
  }
  int bit = 5;
  int acc = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      if (g.adjacent(i, j)) acc |= 1 << bit;
      if (--bit < 0) {
        out.push_back(static_cast<char>(63 + acc));
        bit = 5;
        acc = 0;
      }
    }
  }
  if (bit != 5) out.push_back(static_cast<char>(63 + acc));
  return out;
}

inline Graph graph6_decode(std::string_view s) {
  if (s.empty()) throw Graph6Error("empty string", 0);
  size_t pos = 0;
  long n;
  const auto data_byte = [&](size_t at) -> int {
    const unsigned char c = static_cast<unsigned char>(s[at]);
    if (c < 63 || c > 126) throw Graph6Error("byte out of graph6 range", at);
    return c - 63;
  };
  if (static_cast<unsigned char>(s[0]) == 126) {
    if (s.size() >= 2 && static_cast<unsigned char>(s[1]) == 126) {
      throw Graph6Error("8-byte order form exceeds the 64-vertex cap", 1);
    }
    if (s.size() < 4) throw Graph6Error("truncated long-form order", s.size());
    n = (static_cast<long>(data_byte(1)) << 12) | (data_byte(2) << 6) | data_byte(3);
    if (n < 63) throw Graph6Error("long form used for order below 63", 1);
    pos = 4;
  } else {
    n = data_byte(0);
    pos = 1;
  }
  if (n > Graph::kMaxVertices) {
    throw Graph6Error("order " + std::to_string(n) + " exceeds the 64-vertex cap", 0);
  }
  const long bits_needed = n * (n - 1) / 2;
  const size_t bytes_needed = static_cast<size_t>((bits_needed + 5) / 6);
  if (s.size() - pos < bytes_needed) {
    throw Graph6Error("truncated adjacency data", s.size());
  }
  if (s.size() - pos > bytes_needed) {
    throw Graph6Error("trailing data after adjacency bits", pos + bytes_needed);
  }
  std::vector<uint64_t> rows(static_cast<size_t>(n), 0);
  long bit_index = 0;
  for (size_t b = 0; b < bytes_needed; ++b) {
    const int value = data_byte(pos + b);
    for (int bit = 5; bit >= 0; --bit, ++bit_index) {
      const bool set = (value >> bit) & 1;
      if (bit_index >= bits_needed) {
        if (set) throw Graph6Error("nonzero padding bit", pos + b);
        continue;
      }
      if (!set) continue;
      // Column-major upper triangle: recover (i, j) from the running index.
      long k = bit_index;
      int j = 1;
      while (k >= j) k -= j++;
      const int i = static_cast<int>(k);
      rows[static_cast<size_t>(i)] |= 1ULL << j;
      rows[static_cast<size_t>(j)] |= 1ULL << i;
    }
  }
  return Graph::from_rows(static_cast<int>(n), rows);
}

}  // namespace nlspec
