#include "coverdepth/exact_linalg.hpp"

#include "coverdepth/errors.hpp"

namespace coverdepth {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; static_cast<long long>(d) * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

void validate_field(const FieldSpec& k) {
  if (k.characteristic != 0 && !is_prime(k.characteristic))
    throw BadParamsError("field characteristic must be 0 or a prime");
}

int rank_char0(const IntMatrix& m) {
  std::size_t rows = m.size();
  if (rows == 0) return 0;
  std::size_t cols = m[0].size();
  std::vector<std::vector<BigInt>> a(rows, std::vector<BigInt>(cols));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) a[i][j] = m[i][j];

  BigInt prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && a[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j)
        a[i][j] = (a[i][j] * a[r][c] - a[i][c] * a[r][j]) / prev;
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return static_cast<int>(r);
}

namespace {

long long mod_inverse(long long a, long long p) {
  // Extended Euclid; p prime, a not divisible by p.
  long long t = 0, new_t = 1, r = p, new_r = a % p;
  if (new_r < 0) new_r += p;
  while (new_r != 0) {
    long long q = r / new_r;
    t -= q * new_t;
    std::swap(t, new_t);
    r -= q * new_r;
    std::swap(r, new_r);
  }
  if (t < 0) t += p;
  return t;
}

}  // namespace

int rank_mod_p(const IntMatrix& m, int p) {
  std::size_t rows = m.size();
  if (rows == 0) return 0;
  std::size_t cols = m[0].size();
  std::vector<std::vector<long long>> a(rows, std::vector<long long>(cols));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      long long v = m[i][j] % p;
      a[i][j] = v < 0 ? v + p : v;
    }
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && a[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[r]);
    long long inv = mod_inverse(a[r][c], p);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (a[i][c] == 0) continue;
      long long factor = a[i][c] * inv % p;
      for (std::size_t j = c; j < cols; ++j) {
        a[i][j] = (a[i][j] - factor * a[r][j]) % p;
        if (a[i][j] < 0) a[i][j] += p;
      }
    }
    ++r;
  }
  return static_cast<int>(r);
}

int rank_over(const IntMatrix& m, const FieldSpec& k) {
  validate_field(k);
  return k.characteristic == 0 ? rank_char0(m) : rank_mod_p(m, k.characteristic);
}

std::optional<std::vector<Rational>> solve_square(
    const IntMatrix& a, const std::vector<long long>& b) {
  std::size_t n = a.size();
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = a[i][j];
    m[i][n] = b[i];
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && m[pivot][c] == 0) ++pivot;
    if (pivot == n) return std::nullopt;  // singular
    std::swap(m[pivot], m[c]);
    Rational inv = Rational(1) / m[c][c];
    for (std::size_t j = c; j <= n; ++j) m[c][j] *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || m[i][c] == 0) continue;
      Rational f = m[i][c];
      for (std::size_t j = c; j <= n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = m[i][n];
  return x;
}

}  // namespace coverdepth
