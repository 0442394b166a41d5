#include "coverdepth/simplicial.hpp"

#include <algorithm>
#include <unordered_set>

#include "coverdepth/errors.hpp"
#include "coverdepth/rng.hpp"

namespace coverdepth {

int SimplicialComplex::dimension() const {
  if (void_complex()) return -2;
  int best = 0;
  for (VertexSet f : facets) best = std::max(best, set_size(f));
  return best - 1;
}

SimplicialComplex complex_from_facets(int n, std::vector<VertexSet> sets) {
  SimplicialComplex d;
  d.vertex_count = n;
  for (VertexSet s : sets)
    if (!is_subset(s, full_set(n)))
      throw VertexOutOfRangeError(0);
  // Descending size makes absorption one-directional: a set can only be
  // dominated by one already kept (duplicates included).
  std::sort(sets.begin(), sets.end(),
            [](VertexSet a, VertexSet b) { return size_lex_less(b, a); });
  for (VertexSet s : sets) {
    bool dominated = false;
    for (VertexSet kept : d.facets)
      if (is_subset(s, kept)) {
        dominated = true;
        break;
      }
    if (!dominated) d.facets.push_back(s);
  }
  std::sort(d.facets.begin(), d.facets.end(), size_lex_less);
  return d;
}

SimplicialComplex stanley_reisner_complex(const MonomialIdeal& i) {
  if (i.ambient_n > 22)
    throw SizeLimitError("Stanley-Reisner enumeration capped at n <= 22");
  MonomialIdeal rad = radical(i);
  std::vector<VertexSet> gen_supports;
  for (const Monomial& g : rad.gens) gen_supports.push_back(g.support());
  auto is_face = [&](VertexSet tau) {
    for (VertexSet s : gen_supports)
      if (is_subset(s, tau)) return false;
    return true;
  };
  VertexSet full = full_set(i.ambient_n);
  std::vector<VertexSet> maximal;
  for (VertexSet tau = 0;; ++tau) {
    if (is_face(tau)) {
      bool is_max = true;
      for (int v = 1; v <= i.ambient_n && is_max; ++v)
        if (!has_vertex(tau, v) && is_face(tau | vbit(v))) is_max = false;
      if (is_max) maximal.push_back(tau);
    }
    if (tau == full) break;
  }
  return complex_from_facets(i.ambient_n, std::move(maximal));
}

MonomialIdeal stanley_reisner_ideal(const SimplicialComplex& d) {
  auto is_face = [&](VertexSet tau) {
    for (VertexSet f : d.facets)
      if (is_subset(tau, f)) return true;
    return false;
  };
  std::vector<Monomial> gens;
  VertexSet full = full_set(d.vertex_count);
  for (VertexSet tau = 0;; ++tau) {
    if (!is_face(tau)) {
      // Minimal non-face: every maximal proper subset is a face.
      bool minimal = true;
      VertexSet rest = tau;
      while (rest && minimal) {
        VertexSet low = rest & (~rest + 1);
        rest &= rest - 1;
        if (!is_face(tau & ~low)) minimal = false;
      }
      if (minimal) {
        Monomial m;
        m.e.assign(d.vertex_count, 0);
        for (int v : set_to_vector(tau)) m.e[v - 1] = 1;
        gens.push_back(m);
      }
    }
    if (tau == full) break;
  }
  return minimalize(d.vertex_count, std::move(gens));
}

namespace {

// All faces grouped by cardinality, each bucket sorted for deterministic
// column indexing.
std::vector<std::vector<VertexSet>> faces_by_cardinality(
    const SimplicialComplex& d) {
  std::unordered_set<VertexSet> seen;
  for (VertexSet f : d.facets) {
    VertexSet s = f;
    while (true) {
      seen.insert(s);
      if (s == 0) break;
      s = (s - 1) & f;
    }
  }
  int top = 0;
  for (VertexSet f : seen) top = std::max(top, set_size(f));
  std::vector<std::vector<VertexSet>> buckets(seen.empty() ? 0 : top + 1);
  for (VertexSet f : seen) buckets[set_size(f)].push_back(f);
  for (auto& b : buckets) std::sort(b.begin(), b.end(), lex_less);
  return buckets;
}

IntMatrix boundary_matrix(const std::vector<VertexSet>& lower,
                          const std::vector<VertexSet>& upper) {
  IntMatrix m(lower.size(), std::vector<long long>(upper.size(), 0));
  for (std::size_t col = 0; col < upper.size(); ++col) {
    VertexSet face = upper[col];
    int sign = 1;
    VertexSet rest = face;
    while (rest) {
      VertexSet low = rest & (~rest + 1);
      rest &= rest - 1;
      VertexSet sub = face & ~low;
      auto it = std::lower_bound(lower.begin(), lower.end(), sub,
                                 [](VertexSet a, VertexSet b) { return lex_less(a, b); });
      m[it - lower.begin()][col] = sign;
      sign = -sign;
    }
  }
  return m;
}

}  // namespace

std::vector<IntMatrix> boundary_matrices(const SimplicialComplex& d) {
  auto buckets = faces_by_cardinality(d);
  std::vector<IntMatrix> out;
  for (std::size_t c = 1; c < buckets.size(); ++c)
    out.push_back(boundary_matrix(buckets[c - 1], buckets[c]));
  return out;
}

BettiVector reduced_betti(const SimplicialComplex& d, const FieldSpec& k) {
  validate_field(k);
  BettiVector b;
  if (d.void_complex()) return b;
  auto buckets = faces_by_cardinality(d);
  std::size_t top = buckets.size() - 1;
  std::vector<int> ranks(top + 2, 0);  // ranks[c] = rank of boundary from card c
  for (std::size_t c = 1; c <= top; ++c)
    ranks[c] = rank_over(boundary_matrix(buckets[c - 1], buckets[c]), k);
  b.dims.resize(top + 1);
  for (std::size_t c = 0; c <= top; ++c)
    b.dims[c] = static_cast<long long>(buckets[c].size()) - ranks[c] - ranks[c + 1];
  return b;
}

bool is_acyclic(const SimplicialComplex& d, const FieldSpec& k) {
  return reduced_betti(d, k).all_zero();
}

long long reduced_euler_characteristic(const SimplicialComplex& d) {
  auto buckets = faces_by_cardinality(d);
  long long chi = 0;
  for (std::size_t c = 0; c < buckets.size(); ++c) {
    long long count = static_cast<long long>(buckets[c].size());
    chi += (c % 2 == 0) ? -count : count;  // sign of (-1)^(c-1)
  }
  return chi;
}

std::string homology_key(const SimplicialComplex& d, const FieldSpec& k) {
  std::vector<VertexSet> sorted = d.facets;
  std::sort(sorted.begin(), sorted.end());
  std::string s = "c" + std::to_string(k.characteristic) + ":";
  for (VertexSet f : sorted) {
    s += hex64(f);
    s += ',';
  }
  return s;
}

}  // namespace coverdepth
