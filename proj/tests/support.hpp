// Hand-rolled generators and naive reference computations shared by the unit
// tests. The references use only Rational arithmetic and dense loops so that
// they share no code path with the library routines they check.
#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "lnz/algebra.hpp"
#include "lnz/matrix.hpp"
#include "lnz/rational.hpp"

namespace lnz::testing {

using Dense = std::vector<std::vector<Rational>>;  // row-major
using Table = std::vector<std::vector<std::vector<Rational>>>;  // [i][j][k], 0-based

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }

  // p/q with |p| <= h and 1 <= q <= h.
  Rational small(long h = 3) { return Rational(integer(-h, h), integer(1, h)); }
  Rational nonzero(long h = 3) {
    for (;;) {
      Rational r = small(h);
      if (!r.is_zero()) return r;
    }
  }

  Dense dense(std::size_t rows, std::size_t cols, double fill = 0.6) {
    Dense m(rows, std::vector<Rational>(cols));
    for (auto& row : m)
      for (auto& x : row)
        if (coin(fill)) x = small();
    return m;
  }

  // Invertible by construction: a product of elementary shears and scalings.
  Dense invertible(std::size_t n) {
    Dense m(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = nonzero(2);
    for (std::size_t step = 0; step < 2 * n; ++step) {
      const auto r = static_cast<std::size_t>(integer(0, long(n) - 1));
      const auto s = static_cast<std::size_t>(integer(0, long(n) - 1));
      if (r == s) continue;
      const Rational c = small(2);
      for (std::size_t k = 0; k < n; ++k) m[r][k] += c * m[s][k];
    }
    return m;
  }

  // Strictly upper triangular with random fill: nilpotent by construction.
  Dense nilpotent(std::size_t n, double fill = 0.5) {
    Dense m(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (coin(fill)) m[i][j] = small(2);
    return m;
  }

  StructureTensor tensor(std::size_t dim, double fill = 0.15) {
    StructureTensor t(dim);
    for (std::size_t i = 1; i <= dim; ++i)
      for (std::size_t j = 1; j <= dim; ++j)
        for (std::size_t k = 1; k <= dim; ++k)
          if (coin(fill)) t.add(i, j, k, nonzero(2));
    return t;
  }

  // Products only raise the index: [e_i, e_j] lies in span{e_k : k > max(i,j)}.
  StructureTensor graded_tensor(std::size_t dim, double fill = 0.3) {
    StructureTensor t(dim);
    for (std::size_t i = 1; i <= dim; ++i)
      for (std::size_t j = 1; j <= dim; ++j)
        for (std::size_t k = std::max(i, j) + 1; k <= dim; ++k)
          if (coin(fill)) t.add(i, j, k, nonzero(2));
    return t;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

inline MatrixQ to_matrix(const Dense& d) {
  MatrixQ m(d.size(), d.empty() ? 0 : d[0].size());
  for (std::size_t r = 0; r < d.size(); ++r)
    for (std::size_t c = 0; c < d[r].size(); ++c) m(r, c) = d[r][c];
  return m;
}

inline Table to_table(const StructureTensor& t) {
  const std::size_t n = t.dim();
  Table out(n, std::vector<std::vector<Rational>>(n, std::vector<Rational>(n)));
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j)
      for (const auto& term : t.product(i, j)) out[i - 1][j - 1][term.k - 1] = term.c;
  return out;
}

inline std::vector<Rational> naive_bracket(const Table& t, const std::vector<Rational>& x,
                                           const std::vector<Rational>& y) {
  const std::size_t n = t.size();
  std::vector<Rational> out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) out[k] += x[i] * y[j] * t[i][j][k];
  return out;
}

inline std::vector<Rational> unit(std::size_t n, std::size_t i0) {
  std::vector<Rational> v(n);
  v[i0] = 1;
  return v;
}

// Number of basis triples where the Leibniz identity fails.
inline std::size_t naive_violations(const StructureTensor& a) {
  const Table t = to_table(a);
  const std::size_t n = t.size();
  std::size_t bad = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const auto x = unit(n, i), y = unit(n, j), z = unit(n, k);
        const auto lhs = naive_bracket(t, x, naive_bracket(t, y, z));
        const auto r1 = naive_bracket(t, naive_bracket(t, x, y), z);
        const auto r2 = naive_bracket(t, naive_bracket(t, x, z), y);
        for (std::size_t c = 0; c < n; ++c)
          if (lhs[c] != r1[c] - r2[c]) {
            ++bad;
            break;
          }
      }
  return bad;
}

// Gauss-Jordan solve of M x = b for square invertible M.
inline std::optional<std::vector<Rational>> solve(Dense m, std::vector<Rational> b) {
  const std::size_t n = m.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c].is_zero()) ++p;
    if (p == n) return std::nullopt;
    std::swap(m[p], m[c]);
    std::swap(b[p], b[c]);
    const Rational inv = m[c][c].inverse();
    for (auto& x : m[c]) x *= inv;
    b[c] *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || m[r][c].is_zero()) continue;
      const Rational f = m[r][c];
      for (std::size_t k = 0; k < n; ++k) m[r][k] -= f * m[c][k];
      b[r] -= f * b[c];
    }
  }
  return b;
}

// Structure constants in the basis given by the columns of p.
inline Table naive_transport(const StructureTensor& a, const Dense& p) {
  const Table t = to_table(a);
  const std::size_t n = t.size();
  std::vector<std::vector<Rational>> cols(n, std::vector<Rational>(n));
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t r = 0; r < n; ++r) cols[c][r] = p[r][c];
  Table out(n, std::vector<std::vector<Rational>>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out[i][j] = *solve(p, naive_bracket(t, cols[i], cols[j]));
  return out;
}

// Rank by plain elimination on a copy.
inline std::size_t naive_rank(Dense m) {
  std::size_t rank = 0;
  const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && m[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (m[r][c].is_zero()) continue;
      const Rational f = m[r][c] / m[rank][c];
      for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

// Permutation expansion; fine up to 6x6.
inline Rational naive_det(const Dense& m) {
  const std::size_t n = m.size();
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  Rational total;
  do {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    Rational term = inversions % 2 ? -1 : 1;
    for (std::size_t i = 0; i < n && !term.is_zero(); ++i) term *= m[i][perm[i]];
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

}  // namespace lnz::testing
