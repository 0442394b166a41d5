#include <doctest.h>

#include "coverdepth/homology_cache.hpp"
#include "coverdepth/rng.hpp"
#include "coverdepth/simplicial.hpp"

using namespace coverdepth;

namespace {

SimplicialComplex cx(int n, std::vector<std::vector<int>> facets) {
  std::vector<VertexSet> sets;
  for (const auto& f : facets) sets.push_back(set_from_vector(f));
  return complex_from_facets(n, std::move(sets));
}

MonomialIdeal ideal(int n, std::vector<std::vector<int>> gens) {
  std::vector<Monomial> ms;
  for (auto& g : gens) ms.push_back(Monomial{g});
  return minimalize(n, std::move(ms));
}

const FieldSpec kQ{0};
const FieldSpec kF2{2};

SimplicialComplex random_complex(SplitMix64& rng, int max_n) {
  int n = 2 + static_cast<int>(rng.below(max_n - 1));
  int count = 1 + static_cast<int>(rng.below(5));
  std::vector<VertexSet> facets;
  for (int i = 0; i < count; ++i)
    facets.push_back(static_cast<VertexSet>(rng.below(1u << n)));
  return complex_from_facets(n, std::move(facets));
}

SimplicialComplex cone_over(const SimplicialComplex& d) {
  int apex = d.vertex_count + 1;
  std::vector<VertexSet> facets;
  for (VertexSet f : d.facets) facets.push_back(f | vbit(apex));
  return complex_from_facets(apex, std::move(facets));
}

}  // namespace

TEST_CASE("facet absorption and the two degenerate complexes") {
  SimplicialComplex absorbed = cx(2, {{1, 2}, {2}});
  CHECK(absorbed.facets == std::vector<VertexSet>{set_from_vector({1, 2})});

  SimplicialComplex void_c = cx(2, {});
  CHECK(void_c.void_complex());
  CHECK_FALSE(void_c.empty_complex());

  SimplicialComplex empty_c = cx(2, {{}});
  CHECK(empty_c.empty_complex());
  CHECK_FALSE(empty_c.void_complex());
  CHECK(empty_c.dimension() == -1);
}

TEST_CASE("Stanley-Reisner complex of the worked cover ideals") {
  CHECK(stanley_reisner_complex(ideal(3, {{0, 1, 0}, {1, 0, 1}})) ==
        cx(3, {{1}, {3}}));
  CHECK(stanley_reisner_complex(
            ideal(3, {{1, 1, 0}, {1, 0, 1}, {0, 1, 1}})) ==
        cx(3, {{1}, {2}, {3}}));
  CHECK(stanley_reisner_complex(ideal(2, {{0, 0}})).void_complex());
  CHECK(stanley_reisner_complex(minimalize(2, {})) == cx(2, {{1, 2}}));
}

TEST_CASE("Stanley-Reisner ideal from minimal non-faces") {
  CHECK(stanley_reisner_ideal(cx(2, {{1}, {2}})) == ideal(2, {{1, 1}}));
  CHECK(stanley_reisner_ideal(cx(2, {{1, 2}})).is_zero());
  CHECK(stanley_reisner_ideal(cx(1, {{}})) == ideal(1, {{1}}));
  CHECK(stanley_reisner_ideal(cx(2, {})).is_unit());
}

TEST_CASE("the dictionary round-trips on squarefree ideals") {
  SplitMix64 rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 2 + static_cast<int>(rng.below(4));
    std::vector<Monomial> gens;
    for (int g = 0; g < 3; ++g) {
      std::vector<int> e(n);
      for (int v = 0; v < n; ++v) e[v] = static_cast<int>(rng.below(2));
      gens.push_back(Monomial{e});
    }
    MonomialIdeal i = minimalize(n, gens);
    CHECK(equals(stanley_reisner_ideal(stanley_reisner_complex(i)), i));
  }
}

TEST_CASE("reduced homology of the textbook examples") {
  BettiVector two_points = reduced_betti(cx(3, {{1}, {3}}), kQ);
  CHECK(two_points.betti(-1) == 0);
  CHECK(two_points.betti(0) == 1);
  CHECK(two_points.betti(1) == 0);
  CHECK(reduced_betti(cx(3, {{1}, {3}}), kF2).betti(0) == 1);

  BettiVector circle =
      reduced_betti(cx(3, {{1, 2}, {2, 3}, {1, 3}}), kQ);
  CHECK(circle.betti(0) == 0);
  CHECK(circle.betti(1) == 1);

  CHECK(reduced_betti(cx(3, {{1, 2, 3}}), kQ).all_zero());

  BettiVector empty_c = reduced_betti(cx(2, {{}}), kQ);
  CHECK(empty_c.betti(-1) == 1);

  CHECK(reduced_betti(cx(2, {}), kQ).dims.empty());

  BettiVector three_points = reduced_betti(cx(3, {{1}, {2}, {3}}), kQ);
  CHECK(three_points.betti(0) == 2);
}

TEST_CASE("acyclicity convention") {
  CHECK(is_acyclic(cx(2, {}), kQ));            // void
  CHECK_FALSE(is_acyclic(cx(2, {{}}), kQ));    // empty
  CHECK(is_acyclic(cx(3, {{1, 2, 3}}), kQ));   // simplex
  CHECK_FALSE(is_acyclic(cx(3, {{1}, {2}, {3}}), kQ));
}

TEST_CASE("boundary operators compose to zero") {
  SplitMix64 rng(23);
  for (int trial = 0; trial < 25; ++trial) {
    SimplicialComplex d = random_complex(rng, 6);
    auto mats = boundary_matrices(d);
    for (std::size_t i = 0; i + 1 < mats.size(); ++i) {
      const IntMatrix& a = mats[i];      // card i+1 -> card i
      const IntMatrix& b = mats[i + 1];  // card i+2 -> card i+1
      for (std::size_t r = 0; r < a.size(); ++r)
        for (std::size_t c = 0; c < (b.empty() ? 0 : b[0].size()); ++c) {
          long long sum = 0;
          for (std::size_t k = 0; k < b.size(); ++k)
            sum += a[r][k] * b[k][c];
          CHECK(sum == 0);
        }
    }
  }
}

TEST_CASE("Euler characteristic matches the alternating Betti sum") {
  SplitMix64 rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    SimplicialComplex d = random_complex(rng, 6);
    BettiVector b = reduced_betti(d, kQ);
    long long alt = 0;
    for (std::size_t c = 0; c < b.dims.size(); ++c)
      alt += (c % 2 == 0 ? -1 : 1) * b.dims[c];
    CHECK(alt == reduced_euler_characteristic(d));
  }
}

TEST_CASE("cones are acyclic over both fields") {
  SplitMix64 rng(37);
  for (int trial = 0; trial < 30; ++trial) {
    SimplicialComplex d = random_complex(rng, 5);
    if (d.void_complex()) continue;
    SimplicialComplex c = cone_over(d);
    CHECK(reduced_betti(c, kQ).all_zero());
    CHECK(reduced_betti(c, kF2).all_zero());
  }
}

TEST_CASE("homology cache returns identical values") {
  MemoryHomologyCache cache;
  SimplicialComplex d = cx(3, {{1, 2}, {2, 3}, {1, 3}});
  BettiVector direct = reduced_betti(d, kQ);
  CHECK(reduced_betti_cached(d, kQ, &cache) == direct);
  CHECK(reduced_betti_cached(d, kQ, &cache) == direct);  // hit
  CHECK(cache.get(homology_key(d, kQ)).has_value());
  CHECK_FALSE(cache.get(homology_key(d, kF2)).has_value());
}
