// Exact dense linear algebra at desk scale: fraction-free (Bareiss) ranks
// over the rationals, Gaussian ranks over prime fields, and exact solves of
// small square rational systems. No floating point anywhere.

#ifndef COVERDEPTH_EXACT_LINALG_HPP
#define COVERDEPTH_EXACT_LINALG_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <vector>

namespace coverdepth {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Coefficient field: characteristic 0 (exact rationals) or a prime p.
struct FieldSpec {
  int characteristic = 0;
};

bool is_prime(int p);

// Throws BadParamsError unless characteristic is 0 or prime.
void validate_field(const FieldSpec& k);

using IntMatrix = std::vector<std::vector<long long>>;

int rank_char0(const IntMatrix& m);
int rank_mod_p(const IntMatrix& m, int p);
int rank_over(const IntMatrix& m, const FieldSpec& k);

// Unique solution of a square system over Q, or nullopt when singular.
std::optional<std::vector<Rational>> solve_square(const IntMatrix& a,
                                                  const std::vector<long long>& b);

}  // namespace coverdepth

#endif
