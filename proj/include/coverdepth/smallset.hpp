// Small vertex sets as 32-bit masks. Vertices are 1-based in the public API
// (labels 1..n map to bits 0..n-1); all brute-force caps keep n <= 31.

#ifndef COVERDEPTH_SMALLSET_HPP
#define COVERDEPTH_SMALLSET_HPP

#include <bit>
#include <cstdint>
#include <vector>

namespace coverdepth {

using VertexSet = std::uint32_t;

inline VertexSet vbit(int vertex_1based) {
  return VertexSet{1} << (vertex_1based - 1);
}

inline bool has_vertex(VertexSet s, int vertex_1based) {
  return (s >> (vertex_1based - 1)) & 1u;
}

inline int set_size(VertexSet s) { return std::popcount(s); }

inline VertexSet full_set(int n) {
  return n == 0 ? 0u : (VertexSet{0xFFFFFFFFu} >> (32 - n));
}

inline bool is_subset(VertexSet a, VertexSet b) { return (a & ~b) == 0; }

// Ascending 1-based member list.
inline std::vector<int> set_to_vector(VertexSet s) {
  std::vector<int> out;
  while (s) {
    int b = std::countr_zero(s);
    out.push_back(b + 1);
    s &= s - 1;
  }
  return out;
}

inline VertexSet set_from_vector(const std::vector<int>& vs) {
  VertexSet s = 0;
  for (int v : vs) s |= vbit(v);
  return s;
}

// Lexicographic order on the ascending member sequences ({1,4} < {2,3},
// {1} < {1,3}). Decided by the lowest differing bit.
inline bool lex_less(VertexSet a, VertexSet b) {
  VertexSet x = a ^ b;
  if (x == 0) return false;
  VertexSet low = x & (~x + 1);
  return (a & low) != 0;
}

// Size-then-lex order used wherever set lists are serialized.
inline bool size_lex_less(VertexSet a, VertexSet b) {
  int sa = set_size(a), sb = set_size(b);
  if (sa != sb) return sa < sb;
  return lex_less(a, b);
}

}  // namespace coverdepth

#endif
