// Command-line surface and the verification harness around the engines.
// Exit codes: 0 success, 1 theorem-verdict violation, 2 usage/parse/cap
// errors.

#ifndef COVERDEPTH_CLI_HPP
#define COVERDEPTH_CLI_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "coverdepth/polytope.hpp"
#include "coverdepth/stability.hpp"

namespace coverdepth {

struct RunConfig {
  std::string command;
  std::string input_path;
  std::string ideal_path;
  int characteristic = 0;
  int t = 1;
  int t_max = 0;       // 0 = per-instance default n + 2
  int s_ntf_max = 0;   // 0 = min(4, n)
  bool use_oracle = false;
  bool force_generic = false;
  std::string suite = "all";
  std::string family;
  GenParams gen;
  std::uint64_t seed = 1;
  std::string corpus_dir = "corpus";
  std::string out_dir;
  std::string cache_dir;  // or env COVERDEPTH_CACHE
  int jobs = 1;
  std::string format = "both";  // json | csv | both
  int cap_n = 12;
  int cap_m = 16;
};

// Summary entry of the all-splits polytope sweep for one instance.
struct PolytopeSummary {
  std::string id;
  int splits = 0;
  bool all_integral = true;
  bool monotone = true;
};

struct VerifyOutcome {
  std::vector<DepthReport> reports;
  std::vector<PolytopeSummary> polytope;
  int violations = 0;
};

// Runs the configured verification suite over a corpus directory; report
// order and bytes are independent of the parallelism degree.
VerifyOutcome run_verify(const RunConfig& cfg, HomologyCache* cache);

// Full CLI: parses args (without the program name) and executes.
int run_cli(const std::vector<std::string>& args);

}  // namespace coverdepth

#endif
