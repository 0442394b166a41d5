// Hypergraphs on vertex set {1..n}: validation, balancedness recognition
// (both the cycle and the incidence-matrix criterion), minimal vertex cover
// enumeration, restriction to vertex-disjoint subhypergraphs, and seeded
// instance generators.

#ifndef COVERDEPTH_HYPERGRAPH_HPP
#define COVERDEPTH_HYPERGRAPH_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "coverdepth/smallset.hpp"

namespace coverdepth {

struct Hypergraph {
  int n = 0;                      // vertices labeled 1..n
  std::vector<VertexSet> edges;   // distinct nonempty subsets, input order kept
};

// 0/1 matrix with one row per edge; row j's support is edge j.
struct IncidenceMatrix {
  int edge_count = 0;
  int vertex_count = 0;
  std::vector<VertexSet> row_masks;

  int at(int row, int col) const {  // 0-based
    return (row_masks[row] >> col) & 1u;
  }
};

// Odd cycle certifying unbalancedness: vertices[t] and vertices[t+1] lie in
// edges[t] (cyclically), and every listed edge meets the cycle vertex set in
// exactly those two vertices.
struct CycleWitness {
  std::vector<int> vertices;      // 1-based, distinct
  std::vector<int> edge_indices;  // 1-based indices into Hypergraph::edges
};

struct BalanceResult {
  bool balanced = true;
  std::optional<CycleWitness> witness;
};

// Row/column index sets (1-based) of a submatrix that is B_k up to
// independent row and column permutations.
struct SubmatrixWitness {
  std::vector<int> rows;
  std::vector<int> cols;
};

struct MatrixBalanceResult {
  bool balanced = true;
  std::optional<SubmatrixWitness> witness;
};

// Brute-force caps for the balancedness searches.
struct BruteCaps {
  int max_n = 12;
  int max_m = 16;
};

// Throws EmptyEdgeError / DuplicateEdgeError / VertexOutOfRangeError.
void validate(const Hypergraph& h);

IncidenceMatrix incidence(const Hypergraph& h);

// Searches for an odd cycle whose edges each contain exactly two cycle
// vertices. Throws SizeLimitError above the caps.
BalanceResult is_balanced(const Hypergraph& h, const BruteCaps& caps = {});

// Searches for an odd-order square submatrix with exactly two ones in every
// row and column forming a single cycle (equivalently, an induced cycle of
// length 2 mod 4 in the bipartite row/column support graph).
MatrixBalanceResult check_matrix_balanced(const IncidenceMatrix& a,
                                          const BruteCaps& caps = {});

// Inclusion-minimal transversals, sorted by size then lexicographically.
// An edgeless hypergraph has the single cover {}.
std::vector<VertexSet> minimal_vertex_covers(const Hypergraph& h);

// Subhypergraph on V \ avoid: keeps exactly the edges disjoint from `avoid`,
// relabels the surviving vertices 1..p preserving order.
struct Restriction {
  Hypergraph sub;
  std::vector<int> original_vertex;  // original_vertex[i] = old label of new vertex i+1
};

Restriction restrict(const Hypergraph& h, VertexSet avoid);

// Seeded instance families. bipartite/tree/even_cycle/interval are balanced
// by construction; odd_cycle is the unbalanced control.
struct GenParams {
  int n = 0;          // tree, even_cycle, odd_cycle, interval
  int part_a = 0;     // bipartite
  int part_b = 0;
  double density = 0.5;
  int edge_count = 0; // interval
  std::string kind;   // tree: "random" (default) | "path" | "star"
};

Hypergraph generate(const std::string& family, const GenParams& params,
                    std::uint64_t seed);

}  // namespace coverdepth

#endif
