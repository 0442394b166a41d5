// Exact monomial-ideal arithmetic: minimal generating sets, products, powers,
// intersections, cover ideals and their symbolic powers, and the localized
// membership test behind degree complexes.

#ifndef COVERDEPTH_MONOMIAL_HPP
#define COVERDEPTH_MONOMIAL_HPP

#include <vector>

#include "coverdepth/hypergraph.hpp"
#include "coverdepth/smallset.hpp"

namespace coverdepth {

// x^e with e in N^n; the ambient n is the vector length.
struct Monomial {
  std::vector<int> e;

  int ambient() const { return static_cast<int>(e.size()); }
  int degree() const;
  bool divides(const Monomial& other) const;
  VertexSet support() const;

  bool operator==(const Monomial& other) const = default;
};

Monomial lcm(const Monomial& a, const Monomial& b);
Monomial product(const Monomial& a, const Monomial& b);

// Graded-lex: total degree first, then lexicographic on exponent vectors.
bool graded_lex_less(const Monomial& a, const Monomial& b);

// Minimal generators, canonically ordered. Empty list = zero ideal; the
// single generator 1 = unit ideal.
struct MonomialIdeal {
  int ambient_n = 0;
  std::vector<Monomial> gens;

  bool is_zero() const { return gens.empty(); }
  bool is_unit() const { return gens.size() == 1 && gens[0].degree() == 0; }

  bool operator==(const MonomialIdeal& other) const = default;
};

// Divisibility-minimal subset of `gens`, sorted. Throws MixedAmbientError.
MonomialIdeal minimalize(int ambient_n, std::vector<Monomial> gens);

MonomialIdeal multiply(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal power(const MonomialIdeal& i, int t);

// Computed via pairwise lcms of the generators, then minimalized.
MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);

// J(h): built from minimal vertex covers and cross-checked against the
// intersection of the edge primes (x_i | i in E). Edgeless h gives the unit
// ideal.
MonomialIdeal cover_ideal(const Hypergraph& h);

// Caps for the symbolic-power materialization (generator counts explode).
struct SymbolicCaps {
  int max_s = 6;
  int max_n = 10;
};

// Intersection of the s-th powers of the edge primes.
MonomialIdeal symbolic_power(const Hypergraph& h, int s,
                             const SymbolicCaps& caps = {});

// True iff some generator g has g_j <= alpha_j for every j outside `inverted`
// (membership of x^alpha in I localized at the variables of `inverted`).
// Entries of alpha at coordinates outside `inverted` must be >= 0.
bool contains(const MonomialIdeal& i, const std::vector<int>& alpha,
              VertexSet inverted = 0);

bool equals(const MonomialIdeal& a, const MonomialIdeal& b);

// Squarefree parts of the generators, minimalized.
MonomialIdeal radical(const MonomialIdeal& i);

}  // namespace coverdepth

#endif
