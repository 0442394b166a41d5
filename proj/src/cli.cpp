#include "coverdepth/cli.hpp"

#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <memory>
#include <thread>

#include <CLI11.hpp>

#include "coverdepth/corpus.hpp"
#include "coverdepth/io.hpp"
#include "coverdepth/koszul.hpp"
#include "coverdepth/takayama.hpp"

namespace coverdepth {

namespace {

EngineOptions engine_options(const RunConfig& cfg, HomologyCache* cache,
                             int inner_jobs) {
  EngineOptions opts;
  opts.cache = cache;
  opts.jobs = inner_jobs;
  opts.brute.max_n = cfg.cap_n;
  opts.brute.max_m = cfg.cap_m;
  return opts;
}

Hypergraph load_hypergraph(const RunConfig& cfg) {
  if (cfg.input_path.empty()) throw ParseError("missing input file (-i)");
  return hypergraph_from_json(parse_json_file(cfg.input_path));
}

MonomialIdeal load_ideal(const RunConfig& cfg) {
  if (cfg.ideal_path.empty()) throw ParseError("missing ideal file (--ideal)");
  return ideal_from_json(parse_json_file(cfg.ideal_path));
}

int cmd_check_balanced(const RunConfig& cfg) {
  Hypergraph h = load_hypergraph(cfg);
  BruteCaps caps{cfg.cap_n, cfg.cap_m};
  BalanceResult res = is_balanced(h, caps);
  MatrixBalanceResult mres = check_matrix_balanced(incidence(h), caps);
  if (res.balanced != mres.balanced)
    throw Error("internal: cycle and matrix balancedness criteria disagree");
  if (res.balanced) {
    std::cout << "BALANCED\n";
  } else {
    std::cout << "UNBALANCED\n";
    nlohmann::json w;
    w["cycle_edges"] = res.witness->edge_indices;
    w["cycle_vertices"] = res.witness->vertices;
    w["matrix_cols"] = mres.witness->cols;
    w["matrix_rows"] = mres.witness->rows;
    std::cout << w.dump(2) << "\n";
  }
  return 0;
}

int cmd_covers(const RunConfig& cfg) {
  Hypergraph h = load_hypergraph(cfg);
  validate(h);
  nlohmann::json out = nlohmann::json::array();
  for (VertexSet c : minimal_vertex_covers(h)) out.push_back(set_to_vector(c));
  std::cout << out.dump() << "\n";
  return 0;
}

int cmd_cover_ideal(const RunConfig& cfg) {
  std::cout << to_json(cover_ideal(load_hypergraph(cfg))).dump() << "\n";
  return 0;
}

int cmd_depth(const RunConfig& cfg, HomologyCache* cache) {
  FieldSpec k{cfg.characteristic};
  EngineOptions opts = engine_options(cfg, cache, cfg.jobs);
  int depth;
  if (!cfg.ideal_path.empty()) {
    MonomialIdeal i = load_ideal(cfg);
    depth = cfg.use_oracle ? depth_via_koszul(i, k, cache)
                           : depth_via_takayama(i, k, cache);
  } else {
    Hypergraph h = load_hypergraph(cfg);
    bool balanced = is_balanced(h, opts.brute).balanced;
    if (cfg.use_oracle) {
      depth = depth_via_koszul(power(cover_ideal(h), cfg.t), k, cache);
    } else if (balanced && !cfg.force_generic) {
      depth = depth_power_balanced(h, cfg.t, k, cache, cfg.jobs, opts.search,
                                   opts.brute);
    } else {
      depth = depth_via_takayama(power(cover_ideal(h), cfg.t), k, cache,
                                 opts.search);
    }
  }
  std::cout << depth << "\n";
  return 0;
}

int cmd_depth_function(const RunConfig& cfg, HomologyCache* cache) {
  Hypergraph h = load_hypergraph(cfg);
  FieldSpec k{cfg.characteristic};
  int t_max = cfg.t_max > 0 ? cfg.t_max : h.n + 2;
  auto table =
      depth_function(h, t_max, k, engine_options(cfg, cache, cfg.jobs));
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [t, d] : table) out.push_back(nlohmann::json::array({t, d}));
  std::cout << out.dump() << "\n";
  return 0;
}

int cmd_dstab(const RunConfig& cfg, HomologyCache* cache) {
  Hypergraph h = load_hypergraph(cfg);
  FieldSpec k{cfg.characteristic};
  std::cout << dstab(h, k, engine_options(cfg, cache, cfg.jobs)) << "\n";
  return 0;
}

int cmd_betti(const RunConfig& cfg, HomologyCache* cache) {
  MonomialIdeal i = load_ideal(cfg);
  FieldSpec k{cfg.characteristic};
  BettiTable table = betti_table(i, k, cache);
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [key, dim] : table.entries) {
    nlohmann::json entry;
    entry["alpha"] = key.second;
    entry["dim"] = dim;
    entry["j"] = key.first;
    out.push_back(entry);
  }
  std::cout << out.dump() << "\n";
  std::cout << "depth " << depth_via_koszul(i, k, cache) << "\n";
  return 0;
}

int cmd_polytope(const RunConfig& cfg) {
  EdgeSplitSystem s =
      system_from_json(parse_json_file(cfg.input_path.empty() ? cfg.ideal_path
                                                              : cfg.input_path));
  PolytopeCaps caps;
  if (cfg.suite == "vertices") {
    s.mode = ClosureMode::Closed;
    nlohmann::json out = nlohmann::json::array();
    for (const RationalPoint& v : vertices_closed(s, caps)) {
      nlohmann::json point = nlohmann::json::array();
      for (const Rational& c : v) point.push_back(rational_to_string(c));
      out.push_back(point);
    }
    std::cout << out.dump() << "\n";
    return 0;
  }
  if (cfg.suite == "integrality") {
    IntegralityResult res = check_vertex_integrality(s, caps);
    if (res.integral) {
      std::cout << "INTEGRAL\n";
    } else {
      std::cout << "FRACTIONAL";
      for (const Rational& c : *res.fractional_witness)
        std::cout << " " << rational_to_string(c);
      std::cout << "\n";
    }
    return 0;
  }
  if (cfg.suite == "feasibility") {
    int t_max = cfg.t_max > 0 ? cfg.t_max : s.h.n + 2;
    FeasibilityReport rep = verify_monotone_feasibility(s, t_max, caps);
    for (std::size_t i = 0; i < rep.feasible_by_t.size(); ++i)
      std::cout << "t=" << (i + 1) << " "
                << (rep.feasible_by_t[i] ? "feasible" : "infeasible") << "\n";
    std::cout << (rep.monotone ? "monotone" : "NON-MONOTONE") << "\n";
    return rep.monotone ? 0 : 1;
  }
  throw ParseError("polytope action must be vertices|integrality|feasibility");
}

int cmd_gen(const RunConfig& cfg) {
  Hypergraph h = generate(cfg.family, cfg.gen, cfg.seed);
  std::string text = to_json(h).dump(2) + "\n";
  if (cfg.out_dir.empty())
    std::cout << text;
  else
    write_text_file(cfg.out_dir, text);
  return 0;
}

bool instance_asserted(const RunConfig& cfg, const DepthReport& r,
                       std::vector<std::string>& failures) {
  if (!r.balanced) return true;  // observations only
  bool ok = true;
  auto check = [&](bool cond, const std::string& what) {
    if (!cond) {
      failures.push_back(r.id + ": " + what);
      ok = false;
    }
  };
  if (cfg.suite == "t1" || cfg.suite == "all")
    check(r.verdicts.nonincreasing, "depth function increased");
  if (cfg.suite == "t2" || cfg.suite == "all") {
    check(r.verdicts.dstab_within_n, "stability index not within n");
    check(r.verdicts.limit_matches, "stable depth differs from n - spread");
  }
  if (cfg.suite == "ntf" || cfg.suite == "all")
    check(r.verdicts.ntf_holds, "ordinary and symbolic powers differ");
  return ok;
}

}  // namespace

VerifyOutcome run_verify(const RunConfig& cfg, HomologyCache* cache) {
  std::vector<CorpusInstance> corpus = load_corpus(cfg.corpus_dir);
  FieldSpec k{cfg.characteristic};
  VerifyOutcome outcome;
  outcome.reports.resize(corpus.size());
  std::vector<std::optional<PolytopeSummary>> poly(corpus.size());

  bool want_poly = cfg.suite == "polytope" || cfg.suite == "all";
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    while (true) {
      std::size_t idx = next.fetch_add(1);
      if (idx >= corpus.size()) return;
      const CorpusInstance& inst = corpus[idx];
      int t_max = cfg.t_max > 0 ? cfg.t_max : inst.t_max;
      outcome.reports[idx] =
          verify_instance(inst.h, inst.id, k, t_max, cfg.s_ntf_max,
                          engine_options(cfg, cache, 1));
      if (want_poly && outcome.reports[idx].balanced && inst.h.n <= 6 &&
          inst.h.edges.size() <= 10) {
        SplitSweep sweep = sweep_all_splits(inst.h, inst.h.n + 2);
        poly[idx] = PolytopeSummary{inst.id, sweep.splits, sweep.all_integral,
                                    sweep.monotone};
      }
    }
  };
  int jobs = std::max(1, cfg.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  for (auto& entry : poly)
    if (entry) outcome.polytope.push_back(*entry);

  std::vector<std::string> failures;
  for (const DepthReport& r : outcome.reports)
    instance_asserted(cfg, r, failures);
  for (const PolytopeSummary& s : outcome.polytope) {
    if (!s.all_integral)
      failures.push_back(s.id + ": fractional vertex in a closed unit system");
    if (!s.monotone)
      failures.push_back(s.id + ": lattice feasibility flipped true->false");
  }
  outcome.violations = static_cast<int>(failures.size());
  for (const std::string& f : failures) std::cerr << "VIOLATION " << f << "\n";
  return outcome;
}

namespace {

int cmd_verify(const RunConfig& cfg, HomologyCache* cache) {
  VerifyOutcome outcome = run_verify(cfg, cache);

  nlohmann::json report;
  report["config"] = {
      {"char", cfg.characteristic},
      {"s_ntf_max", cfg.s_ntf_max},
      {"suite", cfg.suite},
      {"t_max", cfg.t_max},
  };
  report["instances"] = nlohmann::json::array();
  for (const DepthReport& r : outcome.reports)
    report["instances"].push_back(to_json(r));
  if (!outcome.polytope.empty() || cfg.suite == "polytope" ||
      cfg.suite == "all") {
    report["polytope"] = nlohmann::json::array();
    for (const PolytopeSummary& s : outcome.polytope) {
      nlohmann::json entry;
      entry["all_integral"] = s.all_integral;
      entry["id"] = s.id;
      entry["monotone"] = s.monotone;
      entry["splits"] = s.splits;
      report["polytope"].push_back(entry);
    }
  }
  report["violations"] = outcome.violations;

  if (!cfg.out_dir.empty()) {
    std::filesystem::create_directories(cfg.out_dir);
    if (cfg.format == "json" || cfg.format == "both")
      write_text_file(cfg.out_dir + "/report.json", report.dump(2) + "\n");
    if (cfg.format == "csv" || cfg.format == "both")
      write_text_file(cfg.out_dir + "/report.csv",
                      reports_to_csv(outcome.reports));
  }

  int balanced_count = 0;
  for (const DepthReport& r : outcome.reports)
    if (r.balanced) ++balanced_count;
  std::cout << "suite " << cfg.suite << ": " << outcome.reports.size()
            << " instances (" << balanced_count << " balanced), "
            << outcome.violations << " violation(s)\n";
  double total = 0;
  for (const DepthReport& r : outcome.reports) total += r.elapsed_seconds;
  std::cerr << "total engine time " << total << "s\n";
  return outcome.violations == 0 ? 0 : 1;
}

int cmd_gen_corpus(const RunConfig& cfg) {
  write_corpus(cfg.out_dir.empty() ? cfg.corpus_dir : cfg.out_dir);
  return 0;
}

int dispatch(const RunConfig& cfg) {
  std::unique_ptr<HomologyCache> cache;
  std::string cache_dir = cfg.cache_dir;
  if (cache_dir.empty())
    if (const char* env = std::getenv("COVERDEPTH_CACHE")) cache_dir = env;
  if (!cache_dir.empty())
    cache = std::make_unique<DiskHomologyCache>(cache_dir);
  else
    cache = std::make_unique<MemoryHomologyCache>();

  if (cfg.command == "check-balanced") return cmd_check_balanced(cfg);
  if (cfg.command == "covers") return cmd_covers(cfg);
  if (cfg.command == "cover-ideal") return cmd_cover_ideal(cfg);
  if (cfg.command == "depth") return cmd_depth(cfg, cache.get());
  if (cfg.command == "depth-function") return cmd_depth_function(cfg, cache.get());
  if (cfg.command == "dstab") return cmd_dstab(cfg, cache.get());
  if (cfg.command == "betti") return cmd_betti(cfg, cache.get());
  if (cfg.command == "polytope") return cmd_polytope(cfg);
  if (cfg.command == "verify") return cmd_verify(cfg, cache.get());
  if (cfg.command == "gen") return cmd_gen(cfg);
  if (cfg.command == "gen-corpus") return cmd_gen_corpus(cfg);
  throw ParseError("unknown command " + cfg.command);
}

}  // namespace

int run_cli(const std::vector<std::string>& args) {
  RunConfig cfg;
  CLI::App app{"depth functions of cover-ideal powers, exactly"};
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("-i,--input", cfg.input_path, "instance file (json)");
    sub->add_option("--char", cfg.characteristic,
                    "field characteristic (0 or a prime)");
    sub->add_option("--jobs", cfg.jobs, "parallel workers");
    sub->add_option("--cache-dir", cfg.cache_dir, "homology cache directory");
    sub->add_option("--cap-n", cfg.cap_n, "vertex cap for brute-force searches");
    sub->add_option("--cap-m", cfg.cap_m, "edge cap for brute-force searches");
  };

  auto* balanced = app.add_subcommand("check-balanced", "balancedness verdict");
  add_common(balanced);
  auto* covers = app.add_subcommand("covers", "minimal vertex covers");
  add_common(covers);
  auto* ideal = app.add_subcommand("cover-ideal", "cover ideal generators");
  add_common(ideal);

  auto* depth = app.add_subcommand("depth", "depth of one power");
  add_common(depth);
  depth->add_option("--t", cfg.t, "power");
  depth->add_option("--ideal", cfg.ideal_path, "monomial ideal file");
  depth->add_flag("--oracle", cfg.use_oracle, "use the Koszul oracle");
  depth->add_flag("--generic", cfg.force_generic,
                  "materialize the power even when balanced");

  auto* dfun = app.add_subcommand("depth-function", "depth table for t=1..t_max");
  add_common(dfun);
  dfun->add_option("--t-max", cfg.t_max, "largest power (default n+2)");

  auto* dst = app.add_subcommand("dstab", "index of depth stability");
  add_common(dst);

  auto* betti = app.add_subcommand("betti", "multigraded Betti table (oracle)");
  add_common(betti);
  betti->add_option("--ideal", cfg.ideal_path, "monomial ideal file");

  auto* poly = app.add_subcommand("polytope",
                                  "vertices | integrality | feasibility");
  add_common(poly);
  poly->add_option("action", cfg.suite, "vertices|integrality|feasibility")
      ->required();
  poly->add_option("--t-max", cfg.t_max, "feasibility sweep bound");

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  add_common(verify);
  verify->add_option("--suite", cfg.suite, "t1|t2|ntf|polytope|all")
      ->check(CLI::IsMember({"t1", "t2", "ntf", "polytope", "all"}));
  verify->add_option("--corpus", cfg.corpus_dir, "corpus directory");
  verify->add_option("--out", cfg.out_dir, "report output directory");
  verify->add_option("--t-max", cfg.t_max, "override per-instance t_max");
  verify->add_option("--s-ntf-max", cfg.s_ntf_max, "symbolic power bound");
  verify->add_option("--format", cfg.format, "json|csv|both")
      ->check(CLI::IsMember({"json", "csv", "both"}));

  auto* gen = app.add_subcommand("gen", "generate a seeded instance");
  gen->add_option("--family", cfg.family,
                  "bipartite|tree|even_cycle|odd_cycle|interval")
      ->required();
  gen->add_option("--seed", cfg.seed, "generator seed");
  gen->add_option("--n", cfg.gen.n, "vertex count");
  gen->add_option("--a", cfg.gen.part_a, "bipartite left part");
  gen->add_option("--b", cfg.gen.part_b, "bipartite right part");
  gen->add_option("--density", cfg.gen.density, "bipartite edge probability");
  gen->add_option("--m", cfg.gen.edge_count, "interval edge count");
  gen->add_option("--kind", cfg.gen.kind, "tree kind: random|path|star");
  gen->add_option("-o,--out", cfg.out_dir, "output file (default stdout)");

  auto* gcorpus = app.add_subcommand("gen-corpus", "write the bundled corpus");
  gcorpus->add_option("--out", cfg.out_dir, "corpus directory")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  cfg.command = app.get_subcommands().front()->get_name();
  if (verify->count("--suite") == 0 && cfg.command == "verify") cfg.suite = "all";

  try {
    return dispatch(cfg);
  } catch (const TheoremViolationError& e) {
    std::cerr << "THEOREM VIOLATION: " << e.what() << "\n"
              << to_json(e.report).dump(2) << "\n";
    return 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace coverdepth
