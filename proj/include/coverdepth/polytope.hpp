// Exact-rational treatment of the edge-split inequality systems: vertex
// enumeration by tight-constraint basic solutions, 0/1-integrality checks,
// lattice-point feasibility, and its monotonicity in the power parameter.

#ifndef COVERDEPTH_POLYTOPE_HPP
#define COVERDEPTH_POLYTOPE_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "coverdepth/exact_linalg.hpp"
#include "coverdepth/hypergraph.hpp"

namespace coverdepth {

// Which inequality the "upper" edges satisfy; lower edges always demand an
// edge sum of at least t. Coordinates are always non-negative.
enum class ClosureMode {
  Omega,   // upper sums <= t-1
  Strict,  // upper sums <  t
  Closed,  // upper sums <= t
};

struct EdgeSplitSystem {
  Hypergraph h;                    // on p vertices
  std::uint32_t upper_edges = 0;   // bit j set = edge j (0-based) is upper
  int t = 1;
  ClosureMode mode = ClosureMode::Closed;
};

using RationalPoint = std::vector<Rational>;

struct PolytopeCaps {
  int max_p = 10;
  int max_t = 16;
  double max_candidates = 8e6;  // tight-subset enumeration budget
};

// All vertices (basic feasible solutions) of the closed system at the
// system's t, exact and deduplicated; unbounded directions simply do not
// appear. Throws SizeLimitError above the caps.
std::vector<RationalPoint> vertices_closed(const EdgeSplitSystem& s,
                                           const PolytopeCaps& caps = {});

struct IntegralityResult {
  bool integral = true;
  std::optional<RationalPoint> fractional_witness;
};

// Checks every vertex of the closed system at t = 1 for 0/1 coordinates.
IntegralityResult check_vertex_integrality(const EdgeSplitSystem& s,
                                           const PolytopeCaps& caps = {});

// Some lattice point of the Omega system (upper sums <= t-1, lower sums
// >= t), or nullopt; the search box {0..t}^p is exhaustive for these
// constraints. Deterministic: returns the lexicographically first solution.
std::optional<std::vector<int>> integer_point(const EdgeSplitSystem& s,
                                              const PolytopeCaps& caps = {});

struct FeasibilityReport {
  std::vector<bool> feasible_by_t;  // index 0 = t = 1
  bool monotone = true;             // no true -> false flip as t grows
  std::optional<int> first_flip_t;  // t where feasibility was lost
};

FeasibilityReport verify_monotone_feasibility(const EdgeSplitSystem& s,
                                              int t_max,
                                              const PolytopeCaps& caps = {});

// Exhaustive sweep over all 2^m edge splits of one hypergraph: 0/1
// integrality of every vertex of every closed unit system, and monotonicity
// of lattice feasibility for every Omega system up to t_max. The vertex
// candidates are shared across splits (the tight rows do not depend on the
// split side), and one signature enumeration per t answers feasibility for
// all splits at once.
struct SplitSweep {
  int splits = 0;
  bool all_integral = true;
  std::optional<std::uint32_t> fractional_split;
  std::optional<RationalPoint> fractional_witness;
  bool monotone = true;
  std::optional<std::uint32_t> flip_split;
  std::optional<int> flip_t;
};

SplitSweep sweep_all_splits(const Hypergraph& h, int t_max,
                            const PolytopeCaps& caps = {});

}  // namespace coverdepth

#endif
