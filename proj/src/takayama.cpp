#include "coverdepth/takayama.hpp"

#include <algorithm>
#include <atomic>
#include <climits>
#include <cmath>
#include <thread>

#include "coverdepth/errors.hpp"

namespace coverdepth {

SimplicialComplex degree_complex_generic(const MonomialIdeal& i,
                                         const std::vector<int>& alpha) {
  int n = i.ambient_n;
  if (static_cast<int>(alpha.size()) != n)
    throw MixedAmbientError("alpha length differs from ambient");
  VertexSet neg = 0;
  for (int v = 1; v <= n; ++v)
    if (alpha[v - 1] < 0) neg |= vbit(v);
  VertexSet rest = full_set(n) & ~neg;
  if (set_size(rest) > 20)
    throw SizeLimitError("degree complex enumeration capped at 2^20 localizations");

  // Collect the faces S (subsets of V \ G) with x^alpha outside I R_{G∪S};
  // membership is monotone in the localized set, so they form a complex.
  std::vector<VertexSet> faces;
  VertexSet s = 0;
  while (true) {
    if (!contains(i, alpha, neg | s)) faces.push_back(s);
    if (s == rest) break;
    s = (s - rest) & rest;  // next subset of rest
  }
  auto is_face = [&](VertexSet f) {
    return std::binary_search(faces.begin(), faces.end(), f);
  };
  std::vector<VertexSet> maximal;
  for (VertexSet f : faces) {
    bool is_max = true;
    VertexSet cand = rest & ~f;
    while (cand && is_max) {
      VertexSet low = cand & (~cand + 1);
      cand &= cand - 1;
      if (is_face(f | low)) is_max = false;
    }
    if (is_max) maximal.push_back(f);
  }
  return complex_from_facets(n, std::move(maximal));
}

SimplicialComplex degree_complex_balanced(const Hypergraph& h,
                                          const std::vector<int>& alpha, int s,
                                          const BruteCaps& caps) {
  validate(h);
  if (static_cast<int>(alpha.size()) != h.n)
    throw MixedAmbientError("alpha length differs from vertex count");
  for (int a : alpha)
    if (a < 0)
      throw NegativeExponentError("balanced degree complex needs alpha >= 0");
  if (s < 1) throw BadParamsError("power must be >= 1");
  if (!is_balanced(h, caps).balanced)
    throw NotBalancedError("degree-complex fast path requires a balanced hypergraph");
  std::vector<VertexSet> facets;
  for (VertexSet e : h.edges) {
    long long sum = 0;
    for (int v : set_to_vector(e)) sum += alpha[v - 1];
    if (sum <= s - 1) facets.push_back(full_set(h.n) & ~e);
  }
  return complex_from_facets(h.n, std::move(facets));
}

long long local_cohomology_dim(const MonomialIdeal& i, int index,
                               const std::vector<int>& alpha, const FieldSpec& k,
                               HomologyCache* cache) {
  VertexSet neg = 0;
  for (std::size_t j = 0; j < alpha.size(); ++j)
    if (alpha[j] < 0) neg |= vbit(static_cast<int>(j) + 1);
  SimplicialComplex d = degree_complex_generic(i, alpha);
  BettiVector b = reduced_betti_cached(d, k, cache);
  return b.betti(index - set_size(neg) - 1);
}

int depth_via_takayama(const MonomialIdeal& i, const FieldSpec& k,
                       HomologyCache* cache, const DepthSearchCaps& caps) {
  if (i.is_zero() || i.is_unit())
    throw ZeroOrUnitIdealError("depth of R/I needs a nonzero proper ideal");
  int n = i.ambient_n;

  // Candidate values per coordinate: -1 for "inverted", otherwise below the
  // largest generator exponent (a variable absent from all generators still
  // needs the value 0).
  std::vector<std::vector<int>> values(n);
  double work = 1.0;
  for (int v = 0; v < n; ++v) {
    int max_exp = 0;
    for (const Monomial& g : i.gens) max_exp = std::max(max_exp, g.e[v]);
    values[v].push_back(-1);
    for (int a = 0; a <= std::max(max_exp - 1, 0); ++a) values[v].push_back(a);
    work *= static_cast<double>(values[v].size());
  }
  if (work > caps.max_box_work)
    throw SizeLimitError("degree-vector search box exceeds the work cap");

  int best = INT_MAX;
  std::vector<int> alpha(n);
  std::vector<std::size_t> odo(n, 0);
  while (true) {
    int negatives = 0;
    for (int v = 0; v < n; ++v) {
      alpha[v] = values[v][odo[v]];
      if (alpha[v] < 0) ++negatives;
    }
    if (negatives < n && negatives < best) {
      SimplicialComplex d = degree_complex_generic(i, alpha);
      BettiVector b = reduced_betti_cached(d, k, cache);
      for (std::size_t c = 0; c < b.dims.size(); ++c)
        if (b.dims[c] != 0)
          best = std::min(best, static_cast<int>(c) + negatives);
    }
    int v = 0;
    while (v < n && ++odo[v] == values[v].size()) odo[v++] = 0;
    if (v == n) break;
  }
  if (best == INT_MAX)
    throw Error("internal: no nonvanishing local cohomology in the search box");
  return best;
}

std::vector<std::uint32_t> achievable_edge_signatures(
    const std::vector<VertexSet>& edges, int p, int t) {
  int m = static_cast<int>(edges.size());
  if (m > 20) throw SizeLimitError("signature sweep capped at 20 edges");
  std::vector<std::vector<int>> edges_at(p);
  for (int e = 0; e < m; ++e)
    for (int v : set_to_vector(edges[e])) edges_at[v - 1].push_back(e);

  std::vector<std::uint64_t> seen((std::size_t{1} << m) / 64 + 1, 0);
  std::vector<int> sums(m, 0);
  std::uint32_t qualifying = (m == 32) ? ~0u : ((1u << m) - 1);  // all sums 0

  auto sweep = [&](auto&& self, int v) -> void {
    if (v == p) {
      seen[qualifying >> 6] |= 1ull << (qualifying & 63);
      return;
    }
    self(self, v + 1);  // value 0
    for (int a = 1; a <= t; ++a) {
      for (int e : edges_at[v])
        if (++sums[e] == t) qualifying &= ~(1u << e);
      self(self, v + 1);
    }
    for (int e : edges_at[v]) {
      sums[e] -= t;
      if (sums[e] < t) qualifying |= 1u << e;
    }
  };
  sweep(sweep, 0);

  std::vector<std::uint32_t> out;
  for (std::uint32_t q = 0; q < (1u << m); ++q)
    if (seen[q >> 6] >> (q & 63) & 1) out.push_back(q);
  return out;
}

namespace {

// Candidate depths contributed by one negative support: c + |F| over the
// cardinalities c with nonvanishing reduced homology of the signature's
// complex.
void scan_negative_support(const Hypergraph& h, VertexSet f, int t,
                           const FieldSpec& k, HomologyCache* cache,
                           std::atomic<int>& best) {
  Restriction r = restrict(h, f);
  if (r.sub.edges.empty()) return;
  int p = r.sub.n;
  int fsize = set_size(f);
  VertexSet full = full_set(p);
  for (std::uint32_t q : achievable_edge_signatures(r.sub.edges, p, t)) {
    if (q == 0) continue;  // void complex
    std::vector<VertexSet> facets;
    for (int e = 0; e < static_cast<int>(r.sub.edges.size()); ++e)
      if (q >> e & 1) facets.push_back(full & ~r.sub.edges[e]);
    SimplicialComplex d = complex_from_facets(p, std::move(facets));
    BettiVector b = reduced_betti_cached(d, k, cache);
    for (std::size_t c = 0; c < b.dims.size(); ++c) {
      if (b.dims[c] == 0) continue;
      int cand = static_cast<int>(c) + fsize;
      int cur = best.load();
      while (cand < cur && !best.compare_exchange_weak(cur, cand)) {
      }
    }
  }
}

}  // namespace

int depth_power_balanced(const Hypergraph& h, int t, const FieldSpec& k,
                         HomologyCache* cache, int jobs,
                         const DepthSearchCaps& caps, const BruteCaps& brute) {
  validate(h);
  if (h.edges.empty()) throw NoEdgesError("depth search needs at least one edge");
  if (t < 1) throw BadParamsError("power must be >= 1");
  if (!is_balanced(h, brute).balanced)
    throw NotBalancedError("fast depth search requires a balanced hypergraph");
  if (std::pow(static_cast<double>(t + 2), h.n) > caps.max_box_work)
    throw SizeLimitError("depth search box exceeds the work cap");

  // Negative supports ordered by size: a support F can only contribute
  // candidates >= |F|, so once a depth below |F| is known the tail is dead.
  std::vector<VertexSet> supports;
  VertexSet full = full_set(h.n);
  for (VertexSet f = 0; f < full; ++f) supports.push_back(f);
  std::sort(supports.begin(), supports.end(), size_lex_less);

  std::atomic<int> best{INT_MAX};
  if (jobs <= 1) {
    for (VertexSet f : supports) {
      if (set_size(f) >= best.load()) break;
      scan_negative_support(h, f, t, k, cache, best);
    }
  } else {
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      while (true) {
        std::size_t idx = next.fetch_add(1);
        if (idx >= supports.size()) return;
        VertexSet f = supports[idx];
        if (set_size(f) >= best.load()) continue;
        scan_negative_support(h, f, t, k, cache, best);
      }
    };
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (best.load() == INT_MAX)
    throw Error("internal: depth search found no nonvanishing homology");
  return best.load();
}

}  // namespace coverdepth
