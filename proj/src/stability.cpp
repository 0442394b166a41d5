#include "coverdepth/stability.hpp"

#include <algorithm>
#include <chrono>

#include "coverdepth/exact_linalg.hpp"

namespace coverdepth {

std::map<int, int> depth_function(const Hypergraph& h, int t_max,
                                  const FieldSpec& k, const EngineOptions& opts) {
  validate(h);
  if (t_max < 1) throw BadParamsError("t_max must be >= 1");
  if (h.edges.empty()) throw NoEdgesError("depth function needs an edge");
  bool balanced = is_balanced(h, opts.brute).balanced;
  std::map<int, int> out;
  if (balanced) {
    for (int t = 1; t <= t_max; ++t)
      out[t] = depth_power_balanced(h, t, k, opts.cache, opts.jobs, opts.search,
                                    opts.brute);
  } else {
    MonomialIdeal j = cover_ideal(h);
    for (int t = 1; t <= t_max; ++t)
      out[t] = depth_via_takayama(power(j, t), k, opts.cache, opts.search);
  }
  return out;
}

int analytic_spread(const MonomialIdeal& i) {
  if (i.is_zero()) throw ZeroIdealError("analytic spread needs a nonzero ideal");
  IntMatrix rows;
  for (const Monomial& g : i.gens) {
    std::vector<long long> row(g.e.begin(), g.e.end());
    row.push_back(1);
    rows.push_back(std::move(row));
  }
  return rank_char0(rows);
}

namespace {

// First index of the final constant run of the table.
int constant_tail_start(const std::map<int, int>& depth_values) {
  int t_max = depth_values.rbegin()->first;
  int tail = t_max;
  int value = depth_values.at(t_max);
  for (int t = t_max - 1; t >= 1; --t) {
    if (depth_values.at(t) != value) break;
    tail = t;
  }
  return tail;
}

}  // namespace

int dstab(const Hypergraph& h, const FieldSpec& k, const EngineOptions& opts) {
  validate(h);
  if (h.edges.empty()) throw NoEdgesError("dstab needs an edge");
  if (!is_balanced(h, opts.brute).balanced)
    throw NotBalancedError("dstab characterization requires a balanced hypergraph");
  int limit = h.n - analytic_spread(cover_ideal(h));
  std::map<int, int> table;
  for (int t = 1; t <= h.n; ++t) {
    table[t] = depth_power_balanced(h, t, k, opts.cache, opts.jobs, opts.search,
                                    opts.brute);
    if (table[t] == limit) return t;
  }
  DepthReport r;
  r.h = h;
  r.balanced = true;
  r.field_char = k.characteristic;
  r.depth_values = table;
  r.analytic_spread_value = h.n - limit;
  r.limit_depth = limit;
  throw TheoremViolationError(
      "depth did not reach n - spread within n powers", std::move(r));
}

DepthReport verify_instance(const Hypergraph& h, const std::string& id,
                            const FieldSpec& k, int t_max, int s_ntf_max,
                            const EngineOptions& opts) {
  auto start = std::chrono::steady_clock::now();
  validate(h);
  if (h.edges.empty()) throw NoEdgesError("verification needs an edge");
  if (t_max <= 0) t_max = h.n + 2;
  if (s_ntf_max <= 0) s_ntf_max = std::min(4, h.n);

  DepthReport r;
  r.id = id;
  r.h = h;
  r.balanced = is_balanced(h, opts.brute).balanced;
  r.field_char = k.characteristic;
  r.t_max = t_max;
  r.s_ntf_max = s_ntf_max;
  r.depth_values = depth_function(h, t_max, k, opts);

  MonomialIdeal j = cover_ideal(h);
  r.analytic_spread_value = analytic_spread(j);
  r.limit_depth = h.n - r.analytic_spread_value;

  int tail = constant_tail_start(r.depth_values);
  if (tail < t_max)
    r.dstab = tail;  // constant over at least the last two entries

  r.verdicts.nonincreasing = true;
  for (int t = 1; t < t_max; ++t)
    if (r.depth_values.at(t) < r.depth_values.at(t + 1))
      r.verdicts.nonincreasing = false;

  r.verdicts.limit_matches = true;
  for (int t = std::max(h.n, 1); t <= t_max; ++t)
    if (r.depth_values.at(t) != r.limit_depth) r.verdicts.limit_matches = false;

  r.verdicts.dstab_within_n = r.dstab.has_value() && *r.dstab <= h.n;

  r.verdicts.ntf_holds = true;
  for (int s = 1; s <= s_ntf_max && r.verdicts.ntf_holds; ++s) {
    MonomialIdeal ordinary = power(j, s);
    MonomialIdeal symbolic = symbolic_power(h, s, opts.symbolic);
    if (!equals(ordinary, symbolic)) {
      r.verdicts.ntf_holds = false;
      r.ntf_witness_s = s;
      for (const Monomial& g : symbolic.gens)
        if (!contains(ordinary, g.e)) {
          r.ntf_witness = g;
          break;
        }
      if (!r.ntf_witness)  // only possible through a symbolic-side bug
        for (const Monomial& g : ordinary.gens)
          if (!contains(symbolic, g.e)) {
            r.ntf_witness = g;
            break;
          }
    }
  }

  r.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return r;
}

}  // namespace coverdepth
