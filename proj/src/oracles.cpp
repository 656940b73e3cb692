#include "lnz/oracles.hpp"

#include <functional>
#include <random>

namespace lnz::oracle {

std::size_t kernel_dim(const MatrixQ& m) {
  std::vector<std::vector<Rational>> a(m.rows(), std::vector<Rational>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) a[r][c] = m(r, c);
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
    std::size_t p = rank;
    while (p < m.rows() && a[p][c].is_zero()) ++p;
    if (p == m.rows()) continue;
    std::swap(a[p], a[rank]);
    const Rational pivot = a[rank][c];
    for (auto& x : a[rank]) x /= pivot;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == rank || a[r][c].is_zero()) continue;
      const Rational f = a[r][c];
      for (std::size_t k = 0; k < m.cols(); ++k) a[r][k] -= f * a[rank][k];
    }
    ++rank;
  }
  return m.cols() - rank;
}

std::vector<std::size_t> block_sizes_by_kernels(const MatrixQ& n) {
  const std::size_t dim = n.rows();
  std::vector<std::size_t> kd{0};
  MatrixQ power = MatrixQ::identity(dim);
  for (std::size_t k = 1; k <= dim; ++k) {
    power = power * n;
    kd.push_back(kernel_dim(power));
  }
  if (dim > 0 && kd.back() != dim) return {};
  // at_least[k] = number of blocks of size >= k
  std::vector<std::size_t> sizes;
  for (std::size_t k = dim; k >= 1; --k) {
    const std::size_t at_least_k = kd[k] - kd[k - 1];
    const std::size_t at_least_next = k < dim ? kd[k + 1] - kd[k] : 0;
    for (std::size_t b = at_least_next; b < at_least_k; ++b) sizes.push_back(k);
  }
  return sizes;
}

std::vector<std::size_t> central_series_dims(const StructureTensor& a) {
  const std::size_t n = a.dim();
  auto rank_of = [n](const std::vector<Vec>& vs) {
    if (vs.empty()) return std::size_t{0};
    MatrixQ m(vs.size(), n);
    for (std::size_t r = 0; r < vs.size(); ++r)
      for (std::size_t c = 0; c < n; ++c) m(r, c) = vs[r][c];
    return n - kernel_dim(m);
  };
  std::vector<Vec> span;
  for (std::size_t i = 1; i <= n; ++i) span.push_back(Vec::basis(n, i));
  std::vector<std::size_t> dims{n};
  while (dims.back() != 0) {
    std::vector<Vec> products;
    for (const auto& u : span)
      for (std::size_t j = 1; j <= n; ++j) products.push_back(bracket(a, u, Vec::basis(n, j)));
    std::vector<Vec> independent;
    for (const auto& p : products) {
      independent.push_back(p);
      if (rank_of(independent) < independent.size()) independent.pop_back();
    }
    if (independent.size() == dims.back()) break;
    dims.push_back(independent.size());
    span = std::move(independent);
  }
  return dims;
}

namespace {

void partitions(std::size_t n, std::size_t max_part, std::vector<std::size_t>& cur,
                std::vector<std::vector<std::size_t>>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (std::size_t p = std::min(n, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions(n - p, p, cur, out);
    cur.pop_back();
  }
}

bool small_entries(const MatrixQ& m) {
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (m(r, c).abs() > 1) return false;
  return true;
}

}  // namespace

std::vector<JordanSample> jordan_test_net(std::size_t max_dim, std::size_t per_type, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<JordanSample> out;
  for (std::size_t n = 1; n <= max_dim; ++n) {
    std::vector<std::vector<std::size_t>> parts;
    std::vector<std::size_t> cur;
    partitions(n, n, cur, parts);
    for (const auto& blocks : parts) {
      MatrixQ j(n, n);
      std::size_t start = 0;
      for (std::size_t b : blocks) {
        for (std::size_t k = 0; k + 1 < b; ++k) j(start + k + 1, start + k) = 1;
        start += b;
      }
      out.push_back({blocks, j});
      for (std::size_t t = 0; t < per_type && n > 1; ++t) {
        for (int attempt = 0; attempt < 50; ++attempt) {
          // U = product of elementary shears I + c E_rs, c = +-1.
          MatrixQ u = MatrixQ::identity(n), uinv = MatrixQ::identity(n);
          const std::size_t ops = 1 + rng() % 3;
          for (std::size_t o = 0; o < ops; ++o) {
            const std::size_t r = rng() % n;
            std::size_t s = rng() % n;
            if (s == r) s = (s + 1) % n;
            const Rational c = rng() % 2 ? 1 : -1;
            MatrixQ e = MatrixQ::identity(n), einv = MatrixQ::identity(n);
            e(r, s) = c;
            einv(r, s) = -c;
            u = u * e;
            uinv = einv * uinv;
          }
          MatrixQ conj = u * j * uinv;
          if (small_entries(conj)) {
            out.push_back({blocks, conj});
            break;
          }
        }
      }
    }
  }
  return out;
}

}  // namespace lnz::oracle
