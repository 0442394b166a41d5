#include "coverdepth/monomial.hpp"

#include <algorithm>
#include <unordered_set>

#include "coverdepth/errors.hpp"

namespace coverdepth {

int Monomial::degree() const {
  int d = 0;
  for (int x : e) d += x;
  return d;
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < e.size(); ++i)
    if (e[i] > other.e[i]) return false;
  return true;
}

VertexSet Monomial::support() const {
  VertexSet s = 0;
  for (std::size_t i = 0; i < e.size(); ++i)
    if (e[i] > 0) s |= vbit(static_cast<int>(i) + 1);
  return s;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial m = a;
  for (std::size_t i = 0; i < m.e.size(); ++i) m.e[i] = std::max(m.e[i], b.e[i]);
  return m;
}

Monomial product(const Monomial& a, const Monomial& b) {
  Monomial m = a;
  for (std::size_t i = 0; i < m.e.size(); ++i) m.e[i] += b.e[i];
  return m;
}

bool graded_lex_less(const Monomial& a, const Monomial& b) {
  int da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  return a.e < b.e;
}

namespace {

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const {
    std::size_t h = 1469598103934665603ull;
    for (int x : m.e) {
      h ^= static_cast<std::size_t>(x) + 0x9E3779B9u;
      h *= 1099511628211ull;
    }
    return h;
  }
};

}  // namespace

MonomialIdeal minimalize(int ambient_n, std::vector<Monomial> gens) {
  for (const Monomial& g : gens)
    if (g.ambient() != ambient_n)
      throw MixedAmbientError("generator ambient mismatch");
  // Dedupe, then scan in degree order; a candidate can only be divided by an
  // already-accepted generator of smaller or equal degree.
  std::unordered_set<Monomial, MonomialHash> distinct(gens.begin(), gens.end());
  std::vector<Monomial> sorted(distinct.begin(), distinct.end());
  std::sort(sorted.begin(), sorted.end(), graded_lex_less);
  MonomialIdeal out;
  out.ambient_n = ambient_n;
  for (const Monomial& c : sorted) {
    bool divisible = false;
    for (const Monomial& g : out.gens)
      if (g.divides(c)) {
        divisible = true;
        break;
      }
    if (!divisible) out.gens.push_back(c);
  }
  return out;
}

MonomialIdeal multiply(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.ambient_n != b.ambient_n)
    throw MixedAmbientError("ideal ambient mismatch");
  std::vector<Monomial> prods;
  prods.reserve(a.gens.size() * b.gens.size());
  for (const Monomial& g : a.gens)
    for (const Monomial& h : b.gens) prods.push_back(product(g, h));
  return minimalize(a.ambient_n, std::move(prods));
}

MonomialIdeal power(const MonomialIdeal& i, int t) {
  if (t < 1) throw BadParamsError("power exponent must be >= 1");
  MonomialIdeal acc = i;
  for (int k = 2; k <= t; ++k) acc = multiply(acc, i);
  return acc;
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.ambient_n != b.ambient_n)
    throw MixedAmbientError("ideal ambient mismatch");
  if (a.is_unit()) return b;
  if (b.is_unit()) return a;
  std::vector<Monomial> meets;
  meets.reserve(a.gens.size() * b.gens.size());
  for (const Monomial& g : a.gens)
    for (const Monomial& h : b.gens) meets.push_back(lcm(g, h));
  return minimalize(a.ambient_n, std::move(meets));
}

namespace {

Monomial squarefree_of(VertexSet support, int n) {
  Monomial m;
  m.e.assign(n, 0);
  for (int v : set_to_vector(support)) m.e[v - 1] = 1;
  return m;
}

// (x_i | i in edge)^s: all exponent vectors supported on the edge with total
// degree s.
std::vector<Monomial> edge_prime_power(VertexSet edge, int s, int n) {
  std::vector<int> verts = set_to_vector(edge);
  std::vector<Monomial> out;
  Monomial cur;
  cur.e.assign(n, 0);
  auto rec = [&](auto&& self, std::size_t idx, int remaining) -> void {
    if (idx + 1 == verts.size()) {
      cur.e[verts[idx] - 1] = remaining;
      out.push_back(cur);
      cur.e[verts[idx] - 1] = 0;
      return;
    }
    for (int take = 0; take <= remaining; ++take) {
      cur.e[verts[idx] - 1] = take;
      self(self, idx + 1, remaining - take);
    }
    cur.e[verts[idx] - 1] = 0;
  };
  rec(rec, 0, s);
  return out;
}

}  // namespace

MonomialIdeal cover_ideal(const Hypergraph& h) {
  validate(h);
  std::vector<Monomial> gens;
  for (VertexSet cover : minimal_vertex_covers(h))
    gens.push_back(squarefree_of(cover, h.n));
  MonomialIdeal from_covers = minimalize(h.n, std::move(gens));

  MonomialIdeal from_primes{h.n, {squarefree_of(0, h.n)}};  // unit ideal
  for (VertexSet e : h.edges) {
    MonomialIdeal prime = minimalize(h.n, edge_prime_power(e, 1, h.n));
    from_primes = intersect(from_primes, prime);
  }
  if (!(from_covers == from_primes))
    throw Error("cover ideal construction mismatch between covers and edge primes");
  return from_covers;
}

MonomialIdeal symbolic_power(const Hypergraph& h, int s,
                             const SymbolicCaps& caps) {
  validate(h);
  if (s < 1) throw BadParamsError("symbolic power exponent must be >= 1");
  if (s > caps.max_s || h.n > caps.max_n)
    throw SizeLimitError("symbolic power beyond caps (s <= " +
                         std::to_string(caps.max_s) +
                         ", n <= " + std::to_string(caps.max_n) + ")");
  Monomial one;
  one.e.assign(h.n, 0);
  MonomialIdeal acc{h.n, {one}};
  // Intersect smaller edge-prime powers first to keep intermediates small.
  std::vector<VertexSet> order = h.edges;
  std::sort(order.begin(), order.end(), size_lex_less);
  for (VertexSet e : order)
    acc = intersect(acc, minimalize(h.n, edge_prime_power(e, s, h.n)));
  return acc;
}

bool contains(const MonomialIdeal& i, const std::vector<int>& alpha,
              VertexSet inverted) {
  if (static_cast<int>(alpha.size()) != i.ambient_n)
    throw MixedAmbientError("alpha length differs from ambient");
  for (std::size_t j = 0; j < alpha.size(); ++j)
    if (!has_vertex(inverted, static_cast<int>(j) + 1) && alpha[j] < 0)
      throw NegativeExponentError(
          "alpha has a negative entry outside the inverted set");
  for (const Monomial& g : i.gens) {
    bool ok = true;
    for (std::size_t j = 0; j < alpha.size(); ++j) {
      if (has_vertex(inverted, static_cast<int>(j) + 1)) continue;
      if (g.e[j] > alpha[j]) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  }
  return false;
}

bool equals(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.ambient_n != b.ambient_n)
    throw MixedAmbientError("ideal ambient mismatch");
  return a.gens == b.gens;
}

MonomialIdeal radical(const MonomialIdeal& i) {
  std::vector<Monomial> gens;
  gens.reserve(i.gens.size());
  for (const Monomial& g : i.gens)
    gens.push_back(squarefree_of(g.support(), i.ambient_n));
  return minimalize(i.ambient_n, std::move(gens));
}

}  // namespace coverdepth
