#include "coverdepth/polytope.hpp"

#include <algorithm>

#include "coverdepth/errors.hpp"
#include "coverdepth/takayama.hpp"

namespace coverdepth {

namespace {

void check_caps(const EdgeSplitSystem& s, const PolytopeCaps& caps) {
  validate(s.h);
  if (s.h.n > caps.max_p)
    throw SizeLimitError("system has more than " + std::to_string(caps.max_p) +
                         " coordinates");
  if (s.t < 1 || s.t > caps.max_t)
    throw SizeLimitError("system power outside 1.." + std::to_string(caps.max_t));
  if (s.h.edges.size() > 20)
    throw SizeLimitError("system has more than 20 edges");
  std::uint32_t all = s.h.edges.empty()
                          ? 0u
                          : ((std::uint32_t{1} << s.h.edges.size()) - 1);
  if ((s.upper_edges & ~all) != 0)
    throw BadParamsError("upper edge mask references nonexistent edges");
}

long long edge_sum(const std::vector<int>& x, VertexSet e) {
  long long sum = 0;
  for (int v : set_to_vector(e)) sum += x[v - 1];
  return sum;
}

Rational edge_sum(const RationalPoint& x, VertexSet e) {
  Rational sum = 0;
  for (int v : set_to_vector(e)) sum += x[v - 1];
  return sum;
}

bool feasible_closed(const EdgeSplitSystem& s, const RationalPoint& x, int t) {
  for (const Rational& c : x)
    if (c < 0) return false;
  for (std::size_t j = 0; j < s.h.edges.size(); ++j) {
    Rational sum = edge_sum(x, s.h.edges[j]);
    if (s.upper_edges >> j & 1) {
      if (sum > t) return false;
    } else {
      if (sum < t) return false;
    }
  }
  return true;
}

}  // namespace

std::vector<RationalPoint> vertices_closed(const EdgeSplitSystem& s,
                                           const PolytopeCaps& caps) {
  check_caps(s, caps);
  int p = s.h.n;
  int m = static_cast<int>(s.h.edges.size());
  int rows = m + p;

  double candidates = 1.0;  // C(rows, p)
  for (int i = 0; i < p; ++i) candidates = candidates * (rows - i) / (i + 1);
  if (candidates > caps.max_candidates)
    throw SizeLimitError("tight-subset enumeration exceeds the candidate cap");

  // Tight rows: edge j gives sum = t (same equality on both sides of the
  // split); coordinate i gives x_i = 0.
  std::vector<RationalPoint> found;
  std::vector<int> pick(p);
  for (int i = 0; i < p; ++i) pick[i] = i;
  while (true) {
    IntMatrix a(p, std::vector<long long>(p, 0));
    std::vector<long long> rhs(p, 0);
    for (int r = 0; r < p; ++r) {
      if (pick[r] < m) {
        VertexSet e = s.h.edges[pick[r]];
        for (int v : set_to_vector(e)) a[r][v - 1] = 1;
        rhs[r] = s.t;
      } else {
        a[r][pick[r] - m] = 1;
      }
    }
    if (auto x = solve_square(a, rhs); x && feasible_closed(s, *x, s.t))
      found.push_back(*x);

    int i = p - 1;
    while (i >= 0 && pick[i] == rows - p + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < p; ++j) pick[j] = pick[j - 1] + 1;
  }
  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end()), found.end());
  return found;
}

IntegralityResult check_vertex_integrality(const EdgeSplitSystem& s,
                                           const PolytopeCaps& caps) {
  EdgeSplitSystem unit = s;
  unit.t = 1;
  unit.mode = ClosureMode::Closed;
  for (const RationalPoint& v : vertices_closed(unit, caps))
    for (const Rational& c : v)
      if (c != 0 && c != 1) return {false, v};
  return {true, std::nullopt};
}

std::optional<std::vector<int>> integer_point(const EdgeSplitSystem& s,
                                              const PolytopeCaps& caps) {
  check_caps(s, caps);
  int p = s.h.n;
  int m = static_cast<int>(s.h.edges.size());
  int t = s.t;

  // DFS in lexicographic order over {0..t}^p with partial-sum pruning: an
  // upper edge that already exceeds t-1 is dead, and a lower edge must still
  // be reachable with t per remaining vertex.
  std::vector<int> remaining(m);  // vertices of the edge not yet assigned
  for (int e = 0; e < m; ++e) remaining[e] = set_size(s.h.edges[e]);
  std::vector<long long> sums(m, 0);
  std::vector<std::vector<int>> edges_at(p);
  for (int e = 0; e < m; ++e)
    for (int v : set_to_vector(s.h.edges[e])) edges_at[v - 1].push_back(e);
  std::vector<int> x(p, 0);

  auto viable = [&]() {
    for (int e = 0; e < m; ++e) {
      if (s.upper_edges >> e & 1) {
        if (sums[e] > t - 1) return false;
      } else {
        if (sums[e] + static_cast<long long>(remaining[e]) * t < t) return false;
      }
    }
    return true;
  };
  auto dfs = [&](auto&& self, int v) -> bool {
    if (v == p) {
      for (int e = 0; e < m; ++e)
        if (!(s.upper_edges >> e & 1) && sums[e] < t) return false;
      return true;
    }
    for (int a = 0; a <= t; ++a) {
      x[v] = a;
      for (int e : edges_at[v]) {
        sums[e] += a;
        --remaining[e];
      }
      bool ok = viable() && self(self, v + 1);
      if (ok) return true;
      for (int e : edges_at[v]) {
        sums[e] -= a;
        ++remaining[e];
      }
    }
    x[v] = 0;
    return false;
  };
  if (dfs(dfs, 0)) return x;
  return std::nullopt;
}

SplitSweep sweep_all_splits(const Hypergraph& h, int t_max,
                            const PolytopeCaps& caps) {
  EdgeSplitSystem probe{h, 0, 1, ClosureMode::Closed};
  check_caps(probe, caps);
  int p = h.n;
  int m = static_cast<int>(h.edges.size());
  if (m > 14) throw SizeLimitError("split sweep capped at 14 edges");

  SplitSweep sweep;
  sweep.splits = 1 << m;

  // Split-independent vertex candidates of the unit closed systems: basic
  // solutions of p tight rows drawn from {edge sum = 1} and {x_i = 0}.
  // Each candidate is classified per edge (sum below / at / above 1).
  struct Candidate {
    RationalPoint x;
    std::uint32_t below = 0, at = 0;
    bool integral01 = true;
  };
  std::vector<Candidate> candidates;
  {
    int rows = m + p;
    double count = 1.0;
    for (int i = 0; i < p; ++i) count = count * (rows - i) / (i + 1);
    if (count > caps.max_candidates)
      throw SizeLimitError("tight-subset enumeration exceeds the candidate cap");
    std::vector<int> pick(p);
    for (int i = 0; i < p; ++i) pick[i] = i;
    while (true) {
      IntMatrix a(p, std::vector<long long>(p, 0));
      std::vector<long long> rhs(p, 0);
      for (int r = 0; r < p; ++r) {
        if (pick[r] < m) {
          for (int v : set_to_vector(h.edges[pick[r]])) a[r][v - 1] = 1;
          rhs[r] = 1;
        } else {
          a[r][pick[r] - m] = 1;
        }
      }
      if (auto x = solve_square(a, rhs)) {
        bool nonneg = true;
        for (const Rational& c : *x)
          if (c < 0) nonneg = false;
        if (nonneg) {
          Candidate cand;
          cand.x = *x;
          for (int e = 0; e < m; ++e) {
            Rational sum = edge_sum(cand.x, h.edges[e]);
            if (sum < 1) cand.below |= 1u << e;
            if (sum == 1) cand.at |= 1u << e;
          }
          for (const Rational& c : cand.x)
            if (c != 0 && c != 1) cand.integral01 = false;
          candidates.push_back(std::move(cand));
        }
      }
      int i = p - 1;
      while (i >= 0 && pick[i] == rows - p + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < p; ++j) pick[j] = pick[j - 1] + 1;
    }
  }

  // One signature enumeration per t answers Omega-feasibility of every
  // split: upper set U is feasible at t iff U is an achievable signature.
  std::vector<std::vector<char>> feasible(t_max + 1,
                                          std::vector<char>(sweep.splits, 0));
  for (int t = 1; t <= t_max; ++t)
    for (std::uint32_t q : achievable_edge_signatures(h.edges, p, t))
      feasible[t][q] = 1;

  for (std::uint32_t u = 0; u < static_cast<std::uint32_t>(sweep.splits); ++u) {
    if (sweep.all_integral) {
      for (const Candidate& c : candidates) {
        // Feasible for split u at t=1 (closed): upper sums <= 1, lower >= 1.
        bool upper_ok = (u & ~(c.below | c.at)) == 0;  // no upper sum above 1
        bool lower_ok = (~u & c.below) == 0;           // no lower sum below 1
        if (upper_ok && lower_ok && !c.integral01) {
          sweep.all_integral = false;
          sweep.fractional_split = u;
          sweep.fractional_witness = c.x;
          break;
        }
      }
    }
    bool seen = false;
    for (int t = 1; t <= t_max && sweep.monotone; ++t) {
      bool ok = feasible[t][u];
      if (seen && !ok) {
        sweep.monotone = false;
        sweep.flip_split = u;
        sweep.flip_t = t;
      }
      seen = seen || ok;
    }
    if (!sweep.all_integral && !sweep.monotone) break;
  }
  return sweep;
}

FeasibilityReport verify_monotone_feasibility(const EdgeSplitSystem& s,
                                              int t_max,
                                              const PolytopeCaps& caps) {
  FeasibilityReport report;
  bool seen_feasible = false;
  for (int t = 1; t <= t_max; ++t) {
    EdgeSplitSystem st = s;
    st.t = t;
    st.mode = ClosureMode::Omega;
    bool ok = integer_point(st, caps).has_value();
    report.feasible_by_t.push_back(ok);
    if (seen_feasible && !ok && report.monotone) {
      report.monotone = false;
      report.first_flip_t = t;
    }
    seen_feasible = seen_feasible || ok;
  }
  return report;
}

}  // namespace coverdepth
