// Degree complexes and depth computation for monomial ideals via graded
// local-cohomology dimensions: the generic path works for any monomial ideal
// by enumerating localizations; the balanced fast path reads the degree
// complex of a cover-ideal power straight off the edge sums and never
// materializes the power.

#ifndef COVERDEPTH_TAKAYAMA_HPP
#define COVERDEPTH_TAKAYAMA_HPP

#include <cstdint>
#include <vector>

#include "coverdepth/homology_cache.hpp"
#include "coverdepth/hypergraph.hpp"
#include "coverdepth/monomial.hpp"
#include "coverdepth/simplicial.hpp"

namespace coverdepth {

// Signature that determines a degree complex in the balanced search:
// the negative support F of the degree vector plus the set of edges of
// restrict(h, F) whose coordinate sum stays below the power. Homology is
// memoized per distinct signature (via its facet set).
struct DegreeComplexKey {
  VertexSet negative_support = 0;
  std::uint32_t qualifying_edges = 0;

  bool operator==(const DegreeComplexKey& other) const = default;
};

// Faces F \ G over all F containing the negative support G of alpha with
// x^alpha outside the localization of i at F.
SimplicialComplex degree_complex_generic(const MonomialIdeal& i,
                                         const std::vector<int>& alpha);

// Facets V \ E over the edges E with sum of alpha over E at most s-1.
// Requires h balanced (throws NotBalancedError) and alpha >= 0.
SimplicialComplex degree_complex_balanced(const Hypergraph& h,
                                          const std::vector<int>& alpha, int s,
                                          const BruteCaps& caps = {});

// Dimension of the alpha-graded piece of the local cohomology of R/i in
// homological index `index`.
long long local_cohomology_dim(const MonomialIdeal& i, int index,
                               const std::vector<int>& alpha, const FieldSpec& k,
                               HomologyCache* cache = nullptr);

struct DepthSearchCaps {
  double max_box_work = 6e9;  // degree-vector enumeration budget
};

// Least index with nonvanishing local cohomology, searched over the finite
// degree box (negative coordinates collapse to -1; non-negative coordinate i
// stays below the largest exponent of x_i among the generators). Throws
// ZeroOrUnitIdealError.
int depth_via_takayama(const MonomialIdeal& i, const FieldSpec& k,
                       HomologyCache* cache = nullptr,
                       const DepthSearchCaps& caps = {});

// Depth of R/J(h)^t for balanced h without materializing the power:
// minimizes over negative supports F and clamped degree vectors in
// {0..t}^p, deduplicating by DegreeComplexKey. Throws NotBalancedError /
// NoEdgesError. The result is independent of `jobs`.
int depth_power_balanced(const Hypergraph& h, int t, const FieldSpec& k,
                         HomologyCache* cache = nullptr, int jobs = 1,
                         const DepthSearchCaps& caps = {},
                         const BruteCaps& brute = {});

// All qualifying-edge masks realized by some degree vector in {0..t}^p for
// the given p-vertex edge list (edge j qualifies when its coordinate sum is
// at most t-1). Shared by the depth search and the feasibility sweeps.
std::vector<std::uint32_t> achievable_edge_signatures(
    const std::vector<VertexSet>& edges, int p, int t);

}  // namespace coverdepth

#endif
