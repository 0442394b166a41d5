// Depth-function tables for cover-ideal powers, index of depth stability,
// analytic spread, and the per-instance verifier producing DepthReport
// records: is the table non-increasing, does it stabilize at n - spread
// within n steps, and do ordinary and symbolic powers agree.

#ifndef COVERDEPTH_STABILITY_HPP
#define COVERDEPTH_STABILITY_HPP

#include <map>
#include <optional>
#include <string>

#include "coverdepth/errors.hpp"
#include "coverdepth/homology_cache.hpp"
#include "coverdepth/hypergraph.hpp"
#include "coverdepth/monomial.hpp"
#include "coverdepth/takayama.hpp"

namespace coverdepth {

struct EngineOptions {
  HomologyCache* cache = nullptr;
  int jobs = 1;
  DepthSearchCaps search;
  BruteCaps brute;
  SymbolicCaps symbolic;
};

struct Verdicts {
  bool nonincreasing = false;   // depth(t) >= depth(t+1) over the table
  bool dstab_within_n = false;  // stability index resolved and <= n
  bool limit_matches = false;   // depth(t) = n - spread for n <= t <= t_max
  bool ntf_holds = false;       // J^s = J^(s) for s <= s_ntf_max
};

struct DepthReport {
  std::string id;
  Hypergraph h;
  bool balanced = false;
  int field_char = 0;
  int t_max = 0;
  int s_ntf_max = 0;
  std::map<int, int> depth_values;  // t = 1..t_max
  std::optional<int> dstab;         // start of the constant tail; nullopt when
                                    // the table still moves at t_max
  int analytic_spread_value = 0;
  int limit_depth = 0;              // n - analytic spread
  Verdicts verdicts;
  std::optional<Monomial> ntf_witness;  // generator separating J^(s) from J^s
  int ntf_witness_s = 0;
  double elapsed_seconds = 0.0;  // informational; never serialized
};

// Raised when the stabilization bound fails empirically; carries the data.
class TheoremViolationError : public Error {
 public:
  DepthReport report;
  TheoremViolationError(const std::string& msg, DepthReport r)
      : Error(msg), report(std::move(r)) {}
};

// Depth of R/J(h)^t for t = 1..t_max; balanced instances use the fast
// search, everything else materializes the power.
std::map<int, int> depth_function(const Hypergraph& h, int t_max,
                                  const FieldSpec& k,
                                  const EngineOptions& opts = {});

// Rank over Q of the generator exponent vectors, each augmented with 1.
int analytic_spread(const MonomialIdeal& i);

// Least t <= n with depth R/J(h)^t = n - analytic spread; balanced h only.
// Throws TheoremViolationError when no such t exists.
int dstab(const Hypergraph& h, const FieldSpec& k,
          const EngineOptions& opts = {});

// Full per-instance verification. t_max <= 0 means n + 2; s_ntf_max <= 0
// means min(4, n).
DepthReport verify_instance(const Hypergraph& h, const std::string& id,
                            const FieldSpec& k, int t_max = 0,
                            int s_ntf_max = 0, const EngineOptions& opts = {});

}  // namespace coverdepth

#endif
