// Independent brute-force depth oracle: multigraded Betti numbers from upper
// Koszul simplicial complexes over the divisor lattice of the generator lcm,
// then depth through the Auslander-Buchsbaum equality. Deliberately shares
// nothing with the degree-complex engine beyond the homology and monomial
// primitives.

#ifndef COVERDEPTH_KOSZUL_HPP
#define COVERDEPTH_KOSZUL_HPP

#include <map>
#include <vector>

#include "coverdepth/homology_cache.hpp"
#include "coverdepth/monomial.hpp"
#include "coverdepth/simplicial.hpp"

namespace coverdepth {

// Squarefree tau within the support of alpha with x^alpha / x_tau in i.
SimplicialComplex upper_koszul_complex(const MonomialIdeal& i,
                                       const std::vector<int>& alpha);

// Nonzero beta_{j,alpha}(I) entries; multidegrees run over the divisors of
// lcm(generators).
struct BettiTable {
  std::map<std::pair<int, std::vector<int>>, long long> entries;

  int max_homological_index() const;
  long long total(int j) const;
};

struct KoszulCaps {
  double max_lattice = 2e6;  // divisor-lattice enumeration budget
};

BettiTable betti_table(const MonomialIdeal& i, const FieldSpec& k,
                       HomologyCache* cache = nullptr,
                       const KoszulCaps& caps = {});

// n - (1 + max nonzero index of the table). Throws ZeroOrUnitIdealError.
int depth_via_koszul(const MonomialIdeal& i, const FieldSpec& k,
                     HomologyCache* cache = nullptr, const KoszulCaps& caps = {});

}  // namespace coverdepth

#endif
