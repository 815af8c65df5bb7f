#pragma once

#include <bit>
#include <cstdint>
#include <vector>

// Vertex sets live in one machine word: bit i-1 stands for vertex i.
// Everything downstream assumes a universe of at most 64 vertices.

namespace kcut {

using Mask = std::uint64_t;

inline constexpr int kMaxVertices = 64;

inline int popcount(Mask m) { return std::popcount(m); }

// 1-based vertex of the lowest set bit; m must be nonzero.
inline int lowest_vertex(Mask m) { return std::countr_zero(m) + 1; }

inline Mask vertex_bit(int v) { return Mask{1} << (v - 1); }

inline bool contains_vertex(Mask m, int v) { return (m >> (v - 1)) & 1; }

inline Mask full_mask(int n) {
  return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1;
}

inline std::vector<int> mask_to_vertices(Mask m) {
  std::vector<int> vs;
  vs.reserve(static_cast<size_t>(popcount(m)));
  while (m) {
    vs.push_back(lowest_vertex(m));
    m &= m - 1;
  }
  return vs;
}

inline Mask vertices_to_mask(const std::vector<int>& vs) {
  Mask m = 0;
  for (int v : vs) m |= vertex_bit(v);
  return m;
}

// Lexicographic order on the ascending vertex sequences, so {1,2} < {1,2,3} < {1,3}.
inline bool lex_less(Mask a, Mask b) {
  if (a == b) return false;
  Mask diff = a ^ b;
  int pos = std::countr_zero(diff);  // first element present in only one side
  // Below pos the sequences agree. The side holding pos has the smaller
  // element there, unless the other side is already exhausted, in which case
  // the other side is a proper prefix and wins.
  Mask above_a = (a >> pos) >> 1;
  Mask above_b = (b >> pos) >> 1;
  if (a & (Mask{1} << pos)) return above_b != 0;
  return above_a == 0;
}

// Advances c (ascending, 1-based) to the next k-subset of [n]; false when done.
inline bool next_k_subset(std::vector<int>& c, int n) {
  int k = static_cast<int>(c.size());
  for (int i = k - 1; i >= 0; --i) {
    if (c[i] < n - (k - 1 - i)) {
      ++c[i];
      for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

// First k-subset {1,...,k}; empty vector when k == 0.
inline std::vector<int> first_k_subset(int k) {
  std::vector<int> c(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) c[static_cast<size_t>(i)] = i + 1;
  return c;
}

}  // namespace kcut
