#include "coverdepth/koszul.hpp"

#include <algorithm>

#include "coverdepth/errors.hpp"

namespace coverdepth {

SimplicialComplex upper_koszul_complex(const MonomialIdeal& i,
                                       const std::vector<int>& alpha) {
  int n = i.ambient_n;
  if (static_cast<int>(alpha.size()) != n)
    throw MixedAmbientError("alpha length differs from ambient");
  VertexSet support = 0;
  for (int v = 1; v <= n; ++v) {
    if (alpha[v - 1] < 0)
      throw NegativeExponentError("upper Koszul multidegree must be >= 0");
    if (alpha[v - 1] > 0) support |= vbit(v);
  }
  // tau is a face iff x^(alpha - tau) lies in i; faces are downward closed.
  std::vector<int> shifted(alpha);
  std::vector<VertexSet> faces;
  VertexSet tau = 0;
  while (true) {
    for (int v : set_to_vector(tau)) --shifted[v - 1];
    if (contains(i, shifted)) faces.push_back(tau);
    for (int v : set_to_vector(tau)) ++shifted[v - 1];
    if (tau == support) break;
    tau = (tau - support) & support;
  }
  auto is_face = [&](VertexSet f) {
    return std::binary_search(faces.begin(), faces.end(), f);
  };
  std::vector<VertexSet> maximal;
  for (VertexSet f : faces) {
    bool is_max = true;
    VertexSet cand = support & ~f;
    while (cand && is_max) {
      VertexSet low = cand & (~cand + 1);
      cand &= cand - 1;
      if (is_face(f | low)) is_max = false;
    }
    if (is_max) maximal.push_back(f);
  }
  return complex_from_facets(n, std::move(maximal));
}

int BettiTable::max_homological_index() const {
  int best = -1;
  for (const auto& [key, dim] : entries) best = std::max(best, key.first);
  return best;
}

long long BettiTable::total(int j) const {
  long long sum = 0;
  for (const auto& [key, dim] : entries)
    if (key.first == j) sum += dim;
  return sum;
}

BettiTable betti_table(const MonomialIdeal& i, const FieldSpec& k,
                       HomologyCache* cache, const KoszulCaps& caps) {
  if (i.is_zero() || i.is_unit())
    throw ZeroOrUnitIdealError("Betti table needs a nonzero proper ideal");
  int n = i.ambient_n;
  std::vector<int> top(n, 0);
  for (const Monomial& g : i.gens)
    for (int v = 0; v < n; ++v) top[v] = std::max(top[v], g.e[v]);
  double lattice = 1.0;
  for (int v = 0; v < n; ++v) lattice *= top[v] + 1;
  if (lattice > caps.max_lattice)
    throw SizeLimitError("divisor lattice exceeds the Koszul oracle cap");

  BettiTable table;
  std::vector<int> alpha(n, 0);
  while (true) {
    // Multidegrees with x^alpha outside the ideal carry a void complex and
    // contribute nothing.
    if (contains(i, alpha)) {
      SimplicialComplex d = upper_koszul_complex(i, alpha);
      BettiVector b = reduced_betti_cached(d, k, cache);
      for (std::size_t c = 0; c < b.dims.size(); ++c)
        if (b.dims[c] != 0)
          table.entries[{static_cast<int>(c), alpha}] = b.dims[c];
    }
    int v = 0;
    while (v < n && ++alpha[v] > top[v]) alpha[v++] = 0;
    if (v == n) break;
  }
  return table;
}

int depth_via_koszul(const MonomialIdeal& i, const FieldSpec& k,
                     HomologyCache* cache, const KoszulCaps& caps) {
  BettiTable table = betti_table(i, k, cache, caps);
  // beta_{j,alpha}(I) = dim of reduced homology in degree j-1, so the stored
  // cardinality index c equals the homological index j directly.
  int pd_module = table.max_homological_index();
  if (pd_module < 0)
    throw Error("internal: empty Betti table for a nonzero proper ideal");
  return i.ambient_n - (pd_module + 1);
}

}  // namespace coverdepth
