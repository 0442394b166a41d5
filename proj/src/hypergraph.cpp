#include "coverdepth/hypergraph.hpp"

#include <algorithm>
#include <unordered_set>

#include "coverdepth/errors.hpp"
#include "coverdepth/rng.hpp"

namespace coverdepth {

void validate(const Hypergraph& h) {
  if (h.n < 0 || h.n > 31) throw BadParamsError("vertex count must be in 0..31");
  std::unordered_set<VertexSet> seen;
  for (std::size_t j = 0; j < h.edges.size(); ++j) {
    VertexSet e = h.edges[j];
    int idx = static_cast<int>(j) + 1;
    if (e == 0) throw EmptyEdgeError(idx);
    if (!is_subset(e, full_set(h.n))) throw VertexOutOfRangeError(idx);
    if (!seen.insert(e).second) throw DuplicateEdgeError(idx);
  }
}

IncidenceMatrix incidence(const Hypergraph& h) {
  IncidenceMatrix a;
  a.edge_count = static_cast<int>(h.edges.size());
  a.vertex_count = h.n;
  a.row_masks = h.edges;
  return a;
}

namespace {

void check_caps(int n, int m, const BruteCaps& caps) {
  if (n > caps.max_n || m > caps.max_m)
    throw SizeLimitError("instance exceeds brute-force caps (n <= " +
                         std::to_string(caps.max_n) +
                         ", m <= " + std::to_string(caps.max_m) + ")");
}

// DFS for an odd cycle in which every cycle edge meets the cycle vertex set
// in exactly two (consecutive) vertices. Maintained invariant: each chosen
// edge intersects the current path in exactly its two endpoints, and no path
// vertex lies in any other chosen edge. Any extension breaking that would
// force a cycle edge with three cycle vertices, so such branches are cut.
struct SpecialCycleSearch {
  const Hypergraph& h;
  std::vector<int> path;        // 1-based vertices
  std::vector<int> used_edges;  // 0-based edge indices
  VertexSet path_set = 0;
  VertexSet used_union = 0;     // union of chosen edges
  std::vector<char> edge_used;
  std::optional<CycleWitness> found;

  explicit SpecialCycleSearch(const Hypergraph& hg)
      : h(hg), edge_used(hg.edges.size(), 0) {}

  bool run() {
    for (int start = 1; start <= h.n && !found; ++start) {
      path = {start};
      path_set = vbit(start);
      used_edges.clear();
      used_union = 0;
      extend(start);
    }
    return found.has_value();
  }

  void extend(int start) {
    if (found) return;
    int last = path.back();
    int k = static_cast<int>(path.size());
    // Try to close an odd cycle of length >= 3.
    if (k >= 3 && (k % 2) == 1) {
      for (std::size_t e = 0; e < h.edges.size(); ++e) {
        if (edge_used[e]) continue;
        VertexSet edge = h.edges[e];
        if ((edge & path_set) == (vbit(last) | vbit(start))) {
          CycleWitness w;
          w.vertices = path;
          for (int ue : used_edges) w.edge_indices.push_back(ue + 1);
          w.edge_indices.push_back(static_cast<int>(e) + 1);
          found = w;
          return;
        }
      }
    }
    if (k >= h.n) return;
    for (std::size_t e = 0; e < h.edges.size(); ++e) {
      if (edge_used[e]) continue;
      VertexSet edge = h.edges[e];
      if (!has_vertex(edge, last)) continue;
      VertexSet candidates = edge & ~path_set & ~used_union & ~(vbit(start) - 1);
      while (candidates) {
        int w = std::countr_zero(candidates) + 1;
        candidates &= candidates - 1;
        // The new edge may touch the path only at {last, w}.
        if ((edge & (path_set | vbit(w))) != (vbit(last) | vbit(w))) continue;
        path.push_back(w);
        path_set |= vbit(w);
        used_edges.push_back(static_cast<int>(e));
        edge_used[e] = 1;
        VertexSet prev_union = used_union;
        used_union |= edge;
        extend(start);
        used_union = prev_union;
        edge_used[e] = 0;
        used_edges.pop_back();
        path_set &= ~vbit(w);
        path.pop_back();
        if (found) return;
      }
    }
  }
};

}  // namespace

BalanceResult is_balanced(const Hypergraph& h, const BruteCaps& caps) {
  check_caps(h.n, static_cast<int>(h.edges.size()), caps);
  SpecialCycleSearch search(h);
  if (search.run()) return {false, search.found};
  return {true, std::nullopt};
}

namespace {

// Induced-cycle search in the bipartite support graph whose two sides are
// the matrix rows and columns. An induced cycle through k rows and k cols is
// exactly a square submatrix with two ones in every row and column forming a
// single cycle; k odd >= 3 certifies unbalancedness.
struct InducedCycleSearch {
  const IncidenceMatrix& a;
  int nodes;  // rows first (0..m-1), then cols (m..m+n-1)
  std::vector<std::uint64_t> adj;
  std::vector<int> path;
  std::uint64_t path_mask = 0;
  std::optional<SubmatrixWitness> found;

  explicit InducedCycleSearch(const IncidenceMatrix& m)
      : a(m), nodes(m.edge_count + m.vertex_count), adj(nodes, 0) {
    for (int r = 0; r < a.edge_count; ++r)
      for (int c = 0; c < a.vertex_count; ++c)
        if (a.at(r, c)) {
          adj[r] |= 1ull << (a.edge_count + c);
          adj[a.edge_count + c] |= 1ull << r;
        }
  }

  bool run() {
    for (int s = 0; s < nodes && !found; ++s) {
      path = {s};
      path_mask = 1ull << s;
      extend(s);
    }
    return found.has_value();
  }

  void emit() {
    SubmatrixWitness w;
    for (int v : path) {
      if (v < a.edge_count)
        w.rows.push_back(v + 1);
      else
        w.cols.push_back(v - a.edge_count + 1);
    }
    std::sort(w.rows.begin(), w.rows.end());
    std::sort(w.cols.begin(), w.cols.end());
    found = w;
  }

  void extend(int start) {
    if (found) return;
    int last = path.back();
    int len = static_cast<int>(path.size());
    std::uint64_t cands = adj[last] & ~path_mask & ~((1ull << start) - 1);
    while (cands) {
      int w = std::countr_zero(cands);
      cands &= cands - 1;
      // Chordless: w may be adjacent only to `last` among path nodes, except
      // for the eventual closing adjacency to `start` checked above.
      std::uint64_t back = adj[w] & path_mask & ~(1ull << last);
      if (len >= 3 && back == (1ull << start)) {
        // w closes a cycle; only accept at a valid length.
        if ((len + 1) % 4 == 2 && len + 1 >= 6) {
          path.push_back(w);
          emit();
          path.pop_back();
          if (found) return;
        }
        continue;
      }
      if (back != 0) continue;
      path.push_back(w);
      path_mask |= 1ull << w;
      extend(start);
      path_mask &= ~(1ull << w);
      path.pop_back();
      if (found) return;
    }
  }
};

}  // namespace

MatrixBalanceResult check_matrix_balanced(const IncidenceMatrix& a,
                                          const BruteCaps& caps) {
  check_caps(a.vertex_count, a.edge_count, caps);
  InducedCycleSearch search(a);
  if (search.run()) return {false, search.found};
  return {true, std::nullopt};
}

std::vector<VertexSet> minimal_vertex_covers(const Hypergraph& h) {
  auto covers_all = [&](VertexSet s) {
    for (VertexSet e : h.edges)
      if ((e & s) == 0) return false;
    return true;
  };
  std::vector<VertexSet> out;
  VertexSet full = full_set(h.n);
  for (VertexSet s = 0;; ++s) {
    if (covers_all(s)) {
      bool minimal = true;
      VertexSet rest = s;
      while (rest && minimal) {
        VertexSet low = rest & (~rest + 1);
        rest &= rest - 1;
        if (covers_all(s & ~low)) minimal = false;
      }
      if (minimal) out.push_back(s);
    }
    if (s == full) break;
  }
  std::sort(out.begin(), out.end(), size_lex_less);
  return out;
}

Restriction restrict(const Hypergraph& h, VertexSet avoid) {
  Restriction r;
  std::vector<int> new_label(h.n + 1, 0);
  for (int v = 1; v <= h.n; ++v) {
    if (!has_vertex(avoid, v)) {
      r.original_vertex.push_back(v);
      new_label[v] = static_cast<int>(r.original_vertex.size());
    }
  }
  r.sub.n = static_cast<int>(r.original_vertex.size());
  for (VertexSet e : h.edges) {
    if (e & avoid) continue;
    VertexSet mapped = 0;
    for (int v : set_to_vector(e)) mapped |= vbit(new_label[v]);
    r.sub.edges.push_back(mapped);
  }
  return r;
}

namespace {

Hypergraph cycle_graph(int n) {
  Hypergraph h;
  h.n = n;
  for (int i = 1; i < n; ++i) h.edges.push_back(vbit(i) | vbit(i + 1));
  h.edges.push_back(vbit(n) | vbit(1));
  return h;
}

}  // namespace

Hypergraph generate(const std::string& family, const GenParams& p,
                    std::uint64_t seed) {
  SplitMix64 rng(seed);
  if (family == "bipartite") {
    if (p.part_a < 1 || p.part_b < 1 || p.part_a + p.part_b > 31)
      throw BadParamsError("bipartite: need part sizes >= 1, a+b <= 31");
    if (p.density < 0.0 || p.density > 1.0)
      throw BadParamsError("bipartite: density must be in [0,1]");
    Hypergraph h;
    h.n = p.part_a + p.part_b;
    auto threshold = static_cast<std::uint64_t>(p.density * 1000000.0 + 0.5);
    for (int u = 1; u <= p.part_a; ++u)
      for (int v = 1; v <= p.part_b; ++v)
        if (rng.chance(threshold, 1000000))
          h.edges.push_back(vbit(u) | vbit(p.part_a + v));
    if (h.edges.empty()) h.edges.push_back(vbit(1) | vbit(p.part_a + 1));
    return h;
  }
  if (family == "tree") {
    if (p.n < 1 || p.n > 31) throw BadParamsError("tree: need 1 <= n <= 31");
    Hypergraph h;
    h.n = p.n;
    const std::string kind = p.kind.empty() ? "random" : p.kind;
    for (int v = 2; v <= p.n; ++v) {
      int parent;
      if (kind == "path")
        parent = v - 1;
      else if (kind == "star")
        parent = 1;
      else if (kind == "random")
        parent = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(v - 1)));
      else
        throw BadParamsError("tree: kind must be random|path|star");
    h.edges.push_back(vbit(parent) | vbit(v));
    }
    return h;
  }
  if (family == "even_cycle") {
    if (p.n < 4 || p.n % 2 != 0 || p.n > 31)
      throw BadParamsError("even_cycle: need even n >= 4");
    return cycle_graph(p.n);
  }
  if (family == "odd_cycle") {
    if (p.n < 3 || p.n % 2 != 1 || p.n > 31)
      throw BadParamsError("odd_cycle: need odd n >= 3");
    return cycle_graph(p.n);
  }
  if (family == "interval") {
    if (p.n < 1 || p.n > 31) throw BadParamsError("interval: need 1 <= n <= 31");
    int want = p.edge_count > 0 ? p.edge_count : p.n;
    if (want > p.n * (p.n + 1) / 2)
      throw BadParamsError("interval: more edges than distinct intervals");
    Hypergraph h;
    h.n = p.n;
    std::unordered_set<VertexSet> seen;
    int attempts = 0;
    while (static_cast<int>(h.edges.size()) < want) {
      if (++attempts > 10000 * want)
        throw BadParamsError("interval: generator failed to find distinct intervals");
      int a = 1 + static_cast<int>(rng.below(p.n));
      int b = a + static_cast<int>(rng.below(static_cast<std::uint64_t>(p.n - a + 1)));
      VertexSet e = 0;
      for (int v = a; v <= b; ++v) e |= vbit(v);
      if (seen.insert(e).second) h.edges.push_back(e);
    }
    return h;
  }
  throw UnknownFamilyError(family);
}

}  // namespace coverdepth
