// Simplicial complexes from facet lists, the Stanley-Reisner dictionary, and
// exact reduced homology over a chosen coefficient field. The void complex
// (no faces at all) and the empty complex {∅} are distinct values: the empty
// complex has one-dimensional reduced homology in degree -1, the void complex
// has none anywhere.

#ifndef COVERDEPTH_SIMPLICIAL_HPP
#define COVERDEPTH_SIMPLICIAL_HPP

#include <string>
#include <vector>

#include "coverdepth/exact_linalg.hpp"
#include "coverdepth/monomial.hpp"
#include "coverdepth/smallset.hpp"

namespace coverdepth {

struct SimplicialComplex {
  int vertex_count = 0;
  std::vector<VertexSet> facets;  // antichain, sorted; empty list = void

  bool void_complex() const { return facets.empty(); }
  bool empty_complex() const { return facets.size() == 1 && facets[0] == 0; }
  // -1 for the empty complex; meaningless (returns -2) for the void complex.
  int dimension() const;

  bool operator==(const SimplicialComplex& other) const = default;
};

// Absorbs dominated sets into an antichain; [] gives the void complex and
// [{}] the empty complex. Throws VertexOutOfRangeError.
SimplicialComplex complex_from_facets(int n, std::vector<VertexSet> sets);

// Faces are the squarefree monomials outside the radical of i.
SimplicialComplex stanley_reisner_complex(const MonomialIdeal& i);

// Generated by the minimal non-faces; inverse of the above on squarefree
// ideals. The void complex maps to the unit ideal.
MonomialIdeal stanley_reisner_ideal(const SimplicialComplex& d);

// dims[c] = dim of reduced homology in degree c-1 (faces of cardinality c).
// The void complex yields an empty vector (all zero by convention).
struct BettiVector {
  std::vector<long long> dims;

  long long betti(int degree) const {
    int c = degree + 1;
    if (c < 0 || c >= static_cast<int>(dims.size())) return 0;
    return dims[c];
  }
  bool all_zero() const {
    for (long long d : dims)
      if (d != 0) return false;
    return true;
  }
  bool operator==(const BettiVector& other) const = default;
};

BettiVector reduced_betti(const SimplicialComplex& d, const FieldSpec& k);

bool is_acyclic(const SimplicialComplex& d, const FieldSpec& k);

// Sum over nonempty faces of (-1)^(card-1); equals the alternating sum of
// the reduced Betti numbers.
long long reduced_euler_characteristic(const SimplicialComplex& d);

// Boundary matrices of the augmented chain complex, index c mapping faces of
// cardinality c to cardinality c-1. Exposed for the d∘d = 0 property test.
std::vector<IntMatrix> boundary_matrices(const SimplicialComplex& d);

// Canonical content key (facets + field) for memoization and disk caching.
std::string homology_key(const SimplicialComplex& d, const FieldSpec& k);

}  // namespace coverdepth

#endif
