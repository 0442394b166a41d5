#include <doctest.h>

#include <algorithm>

#include "coverdepth/errors.hpp"
#include "coverdepth/hypergraph.hpp"
#include "coverdepth/rng.hpp"

using namespace coverdepth;

namespace {

Hypergraph make(int n, std::vector<std::vector<int>> edges) {
  Hypergraph h;
  h.n = n;
  for (const auto& e : edges) h.edges.push_back(set_from_vector(e));
  return h;
}

const Hypergraph kPath3 = make(3, {{1, 2}, {2, 3}});
const Hypergraph kTriangle = make(3, {{1, 2}, {2, 3}, {1, 3}});

bool witness_is_special_odd_cycle(const Hypergraph& h, const CycleWitness& w) {
  std::size_t k = w.vertices.size();
  if (k < 3 || k % 2 == 0 || w.edge_indices.size() != k) return false;
  VertexSet cycle = set_from_vector(w.vertices);
  for (std::size_t t = 0; t < k; ++t) {
    VertexSet edge = h.edges[w.edge_indices[t] - 1];
    VertexSet pair = vbit(w.vertices[t]) | vbit(w.vertices[(t + 1) % k]);
    if (!is_subset(pair, edge)) return false;
    if ((edge & cycle) != pair) return false;  // exactly two cycle vertices
  }
  if (set_size(cycle) != static_cast<int>(k)) return false;
  std::vector<int> es = w.edge_indices;
  std::sort(es.begin(), es.end());
  return std::adjacent_find(es.begin(), es.end()) == es.end();
}

}  // namespace

TEST_CASE("validation accepts a path and reports specific defects") {
  CHECK_NOTHROW(validate(kPath3));
  CHECK_THROWS_AS(validate(make(3, {{1, 2}, {1, 2}})), DuplicateEdgeError);
  CHECK_THROWS_AS(validate(make(2, {{1, 3}})), VertexOutOfRangeError);
  Hypergraph empty_edge;
  empty_edge.n = 2;
  empty_edge.edges = {0};
  CHECK_THROWS_AS(validate(empty_edge), EmptyEdgeError);
}

TEST_CASE("triangle is unbalanced with a length-3 witness") {
  BalanceResult res = is_balanced(kTriangle);
  REQUIRE_FALSE(res.balanced);
  REQUIRE(res.witness.has_value());
  CHECK(res.witness->vertices.size() == 3);
  CHECK(witness_is_special_odd_cycle(kTriangle, *res.witness));
}

TEST_CASE("bipartite graphs are balanced") {
  CHECK(is_balanced(kPath3).balanced);
  CHECK(is_balanced(make(4, {{1, 3}, {1, 4}, {2, 3}, {2, 4}})).balanced);
  CHECK(is_balanced(make(6, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {1, 6}}))
            .balanced);
}

TEST_CASE("a covering 3-edge does not repair the triangle") {
  Hypergraph h = make(3, {{1, 2}, {2, 3}, {1, 3}, {1, 2, 3}});
  BalanceResult res = is_balanced(h);
  REQUIRE_FALSE(res.balanced);
  CHECK(witness_is_special_odd_cycle(h, *res.witness));
  CHECK_FALSE(check_matrix_balanced(incidence(h)).balanced);
}

TEST_CASE("matrix criterion on the displayed 3x3 pattern") {
  IncidenceMatrix b3;
  b3.edge_count = 3;
  b3.vertex_count = 3;
  b3.row_masks = {set_from_vector({1, 2}), set_from_vector({2, 3}),
                  set_from_vector({1, 3})};
  MatrixBalanceResult res = check_matrix_balanced(b3);
  REQUIRE_FALSE(res.balanced);
  CHECK(res.witness->rows == std::vector<int>{1, 2, 3});
  CHECK(res.witness->cols == std::vector<int>{1, 2, 3});

  IncidenceMatrix id2;
  id2.edge_count = 2;
  id2.vertex_count = 2;
  id2.row_masks = {vbit(1), vbit(2)};
  CHECK(check_matrix_balanced(id2).balanced);
}

TEST_CASE("balancedness caps reject oversized instances") {
  Hypergraph big;
  big.n = 13;
  big.edges = {vbit(1) | vbit(2)};
  CHECK_THROWS_AS(is_balanced(big), SizeLimitError);
}

TEST_CASE("minimal vertex covers of the worked examples") {
  CHECK(minimal_vertex_covers(kPath3) ==
        std::vector<VertexSet>{set_from_vector({2}), set_from_vector({1, 3})});
  CHECK(minimal_vertex_covers(kTriangle) ==
        std::vector<VertexSet>{set_from_vector({1, 2}), set_from_vector({1, 3}),
                               set_from_vector({2, 3})});
  CHECK(minimal_vertex_covers(make(2, {{1, 2}})) ==
        std::vector<VertexSet>{vbit(1), vbit(2)});
  CHECK(minimal_vertex_covers(make(2, {})) == std::vector<VertexSet>{0});
}

TEST_CASE("covers form an antichain and meet every edge") {
  GenParams p;
  p.part_a = 3;
  p.part_b = 4;
  p.density = 0.7;
  Hypergraph h = generate("bipartite", p, 11);
  auto covers = minimal_vertex_covers(h);
  for (VertexSet c : covers)
    for (VertexSet e : h.edges) CHECK((c & e) != 0);
  for (std::size_t i = 0; i < covers.size(); ++i)
    for (std::size_t j = 0; j < covers.size(); ++j)
      if (i != j) CHECK_FALSE(is_subset(covers[i], covers[j]));
}

TEST_CASE("restriction drops the touched edges and relabels") {
  Restriction r = restrict(kPath3, vbit(3));
  CHECK(r.sub.n == 2);
  CHECK(r.sub.edges == std::vector<VertexSet>{set_from_vector({1, 2})});
  CHECK(r.original_vertex == std::vector<int>{1, 2});

  Restriction mid = restrict(kPath3, vbit(2));
  CHECK(mid.sub.n == 2);
  CHECK(mid.sub.edges.empty());
  CHECK(mid.original_vertex == std::vector<int>{1, 3});

  Restriction all = restrict(kTriangle, 0);
  CHECK(all.sub.n == 3);
  CHECK(all.sub.edges == kTriangle.edges);
}

TEST_CASE("restriction preserves balancedness and edge selection") {
  GenParams p;
  p.part_a = 3;
  p.part_b = 3;
  p.density = 0.8;
  Hypergraph h = generate("bipartite", p, 5);
  for (VertexSet f = 0; f < full_set(h.n); f += 3) {
    Restriction r = restrict(h, f);
    CHECK(is_balanced(r.sub).balanced);
    std::size_t kept = 0;
    for (VertexSet e : h.edges)
      if ((e & f) == 0) ++kept;
    CHECK(r.sub.edges.size() == kept);
  }
}

TEST_CASE("generators: cycles, determinism, family errors") {
  GenParams p;
  p.n = 4;
  Hypergraph c4 = generate("even_cycle", p, 1);
  CHECK(c4.edges.size() == 4);
  CHECK(is_balanced(c4).balanced);

  p.n = 3;
  Hypergraph c3 = generate("odd_cycle", p, 1);
  CHECK(c3.edges == kTriangle.edges);
  CHECK_FALSE(is_balanced(c3).balanced);

  GenParams bp;
  bp.part_a = 2;
  bp.part_b = 2;
  bp.density = 1.0;
  Hypergraph k22a = generate("bipartite", bp, 7);
  Hypergraph k22b = generate("bipartite", bp, 7);
  CHECK(k22a.edges == k22b.edges);
  CHECK(k22a.edges.size() == 4);

  CHECK_THROWS_AS(generate("hypercube", p, 1), UnknownFamilyError);
  GenParams bad;
  bad.n = 3;
  CHECK_THROWS_AS(generate("even_cycle", bad, 1), BadParamsError);
}

TEST_CASE("every non-control family generates balanced instances") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    GenParams bp;
    bp.part_a = 2 + static_cast<int>(seed % 3);
    bp.part_b = 2 + static_cast<int>((seed / 2) % 3);
    bp.density = 0.5;
    Hypergraph b = generate("bipartite", bp, seed);
    CHECK(is_balanced(b).balanced);
    CHECK(check_matrix_balanced(incidence(b)).balanced);

    GenParams tp;
    tp.n = 3 + static_cast<int>(seed % 6);
    Hypergraph t = generate("tree", tp, seed);
    CHECK(is_balanced(t).balanced);

    GenParams ip;
    ip.n = 4 + static_cast<int>(seed % 5);
    ip.edge_count = ip.n - 1;
    Hypergraph iv = generate("interval", ip, seed);
    CHECK(is_balanced(iv).balanced);
    CHECK(check_matrix_balanced(incidence(iv)).balanced);
  }
}

TEST_CASE("cycle and matrix balancedness criteria agree on random inputs") {
  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    SplitMix64 rng(seed * 977);
    Hypergraph h;
    h.n = 4 + static_cast<int>(rng.below(3));
    int m = 3 + static_cast<int>(rng.below(4));
    for (int e = 0; e < m; ++e) {
      VertexSet s = 0;
      while (set_size(s) < 2)
        s = static_cast<VertexSet>(rng.below(1u << h.n));
      bool fresh = true;
      for (VertexSet prev : h.edges) fresh = fresh && prev != s;
      if (fresh) h.edges.push_back(s);
    }
    CHECK(is_balanced(h).balanced ==
          check_matrix_balanced(incidence(h)).balanced);
  }
  for (int n : {3, 5, 7}) {
    GenParams p;
    p.n = n;
    Hypergraph c = generate("odd_cycle", p, 1);
    CHECK_FALSE(is_balanced(c).balanced);
    CHECK_FALSE(check_matrix_balanced(incidence(c)).balanced);
  }
}
