#include <doctest.h>

#include "coverdepth/errors.hpp"
#include "coverdepth/koszul.hpp"
#include "coverdepth/rng.hpp"

using namespace coverdepth;

namespace {

MonomialIdeal ideal(int n, std::vector<std::vector<int>> gens) {
  std::vector<Monomial> ms;
  for (auto& g : gens) ms.push_back(Monomial{g});
  return minimalize(n, std::move(ms));
}

SimplicialComplex cx(int n, std::vector<std::vector<int>> facets) {
  std::vector<VertexSet> sets;
  for (const auto& f : facets) sets.push_back(set_from_vector(f));
  return complex_from_facets(n, std::move(sets));
}

const FieldSpec kQ{0};

}  // namespace

TEST_CASE("upper Koszul complexes by hand") {
  MonomialIdeal i = ideal(3, {{1, 1, 0}, {0, 1, 1}});
  CHECK(upper_koszul_complex(i, {1, 1, 1}) == cx(3, {{1}, {3}}));
  CHECK(upper_koszul_complex(ideal(2, {{1, 0}}), {1, 0}) == cx(2, {{}}));
  CHECK(upper_koszul_complex(i, {1, 0, 0}).void_complex());
}

TEST_CASE("Betti tables of the small classics") {
  BettiTable kz = betti_table(ideal(2, {{1, 0}, {0, 1}}), kQ);
  CHECK(kz.entries.at({0, {1, 0}}) == 1);
  CHECK(kz.entries.at({0, {0, 1}}) == 1);
  CHECK(kz.entries.at({1, {1, 1}}) == 1);
  CHECK(kz.entries.size() == 3);

  BettiTable taylor = betti_table(ideal(3, {{1, 1, 0}, {0, 1, 1}}), kQ);
  CHECK(taylor.total(0) == 2);
  CHECK(taylor.total(1) == 1);
  CHECK(taylor.entries.at({1, {1, 1, 1}}) == 1);

  BettiTable principal = betti_table(ideal(2, {{1, 0}}), kQ);
  CHECK(principal.entries.size() == 1);
  CHECK(principal.entries.at({0, {1, 0}}) == 1);
}

TEST_CASE("index-zero entries sit exactly at the minimal generators") {
  SplitMix64 rng(91);
  for (int trial = 0; trial < 25; ++trial) {
    int n = 2 + static_cast<int>(rng.below(3));
    std::vector<Monomial> gens;
    for (int g = 0; g < 1 + static_cast<int>(rng.below(4)); ++g) {
      std::vector<int> e(n);
      for (int v = 0; v < n; ++v) e[v] = static_cast<int>(rng.below(3));
      gens.push_back(Monomial{e});
    }
    MonomialIdeal i = minimalize(n, gens);
    if (i.is_zero() || i.is_unit()) continue;
    BettiTable table = betti_table(i, kQ);
    long long zero_entries = 0;
    for (const auto& [key, dim] : table.entries)
      if (key.first == 0) {
        ++zero_entries;
        CHECK(dim == 1);
        Monomial m{key.second};
        bool is_gen = false;
        for (const Monomial& g : i.gens) is_gen = is_gen || g == m;
        CHECK(is_gen);
      }
    CHECK(zero_entries == static_cast<long long>(i.gens.size()));
    // Taylor bound and the depth range for proper nonzero ideals.
    CHECK(table.max_homological_index() + 1 <=
          static_cast<int>(i.gens.size()));
    int depth = depth_via_koszul(i, kQ);
    CHECK(depth >= 0);
    CHECK(depth <= n - 1);
    CHECK(depth == n - 1 - table.max_homological_index());
  }
}

TEST_CASE("oracle depths of the worked examples") {
  CHECK(depth_via_koszul(ideal(2, {{1, 0}, {0, 1}}), kQ) == 0);
  CHECK(depth_via_koszul(ideal(3, {{1, 1, 0}, {0, 1, 1}}), kQ) == 1);
  MonomialIdeal ci = ideal(3, {{0, 1, 0}, {1, 0, 1}});
  CHECK(depth_via_koszul(power(ci, 2), kQ) == 1);
  CHECK_THROWS_AS(depth_via_koszul(minimalize(3, {}), kQ),
                  ZeroOrUnitIdealError);
  CHECK_THROWS_AS(betti_table(ideal(2, {{0, 0}}), kQ), ZeroOrUnitIdealError);
}

TEST_CASE("oracle rejects oversized divisor lattices") {
  std::vector<int> huge(8, 9);
  MonomialIdeal i = ideal(8, {huge, std::vector<int>(8, 0)});
  // The all-zero generator makes it the unit ideal; use two real ones.
  std::vector<int> other(8, 0);
  other[0] = 10;
  i = ideal(8, {huge, other});
  KoszulCaps caps;
  caps.max_lattice = 1000;
  CHECK_THROWS_AS(betti_table(i, kQ, nullptr, caps), SizeLimitError);
}
