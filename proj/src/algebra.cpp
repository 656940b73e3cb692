#include "lnz/algebra.hpp"

#include <algorithm>

#include "lnz/error.hpp"

namespace lnz {

StructureTensor::StructureTensor(std::size_t dim, std::string name)
    : dim_(dim), name_(std::move(name)), table_(dim * dim) {}

std::size_t StructureTensor::slot(std::size_t i, std::size_t j) const {
  if (i < 1 || i > dim_ || j < 1 || j > dim_) throw Error(ErrorCode::IndexError, "basis index out of range");
  return (i - 1) * dim_ + (j - 1);
}

const std::vector<Term>& StructureTensor::product(std::size_t i, std::size_t j) const {
  return table_[slot(i, j)];
}

Vec StructureTensor::product_vec(std::size_t i, std::size_t j) const {
  Vec v(dim_);
  for (const auto& t : product(i, j)) v[t.k - 1] = t.c;
  return v;
}

void StructureTensor::add(std::size_t i, std::size_t j, std::size_t k, const Rational& c) {
  auto& entry = table_[slot(i, j)];
  if (k < 1 || k > dim_) throw Error(ErrorCode::IndexError, "basis index out of range");
  if (c.is_zero()) return;
  auto it = std::lower_bound(entry.begin(), entry.end(), k, [](const Term& t, std::size_t key) { return t.k < key; });
  if (it != entry.end() && it->k == k) {
    it->c += c;
    if (it->c.is_zero()) entry.erase(it);
  } else {
    entry.insert(it, Term{k, c});
  }
}

void StructureTensor::set(std::size_t i, std::size_t j, const Vec& v) {
  if (v.dim() != dim_) throw Error(ErrorCode::DimensionMismatch, "product vector has the wrong dimension");
  auto& entry = table_[slot(i, j)];
  entry.clear();
  for (std::size_t k = 0; k < dim_; ++k)
    if (!v[k].is_zero()) entry.push_back(Term{k + 1, v[k]});
}

void StructureTensor::clear(std::size_t i, std::size_t j) { table_[slot(i, j)].clear(); }

std::size_t StructureTensor::nonzero_pairs() const {
  return static_cast<std::size_t>(std::count_if(table_.begin(), table_.end(), [](const auto& e) { return !e.empty(); }));
}

Vec bracket(const StructureTensor& a, const Vec& x, const Vec& y) {
  const std::size_t n = a.dim();
  if (x.dim() != n || y.dim() != n) throw Error(ErrorCode::DimensionMismatch, "bracket operands do not match the algebra");
  Vec out(n);
  for (std::size_t i = 1; i <= n; ++i) {
    if (x[i - 1].is_zero()) continue;
    for (std::size_t j = 1; j <= n; ++j) {
      if (y[j - 1].is_zero()) continue;
      const auto& entry = a.product(i, j);
      if (entry.empty()) continue;
      Rational xy = x[i - 1] * y[j - 1];
      for (const auto& t : entry) out[t.k - 1] += xy * t.c;
    }
  }
  return out;
}

Residual leibniz_residual(const StructureTensor& a) {
  const std::size_t n = a.dim();
  Residual out;
  std::vector<Rational> acc(n);
  std::vector<bool> touched(n);
  auto accumulate = [&](const std::vector<Term>& outer, std::size_t fixed, bool outer_left, int sign) {
    for (const auto& m : outer) {
      const auto& inner = outer_left ? a.product(m.k, fixed) : a.product(fixed, m.k);
      for (const auto& l : inner) {
        Rational v = m.c * l.c;
        if (sign < 0) acc[l.k - 1] -= v;
        else acc[l.k - 1] += v;
        touched[l.k - 1] = true;
      }
    }
  };
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j)
      for (std::size_t k = 1; k <= n; ++k) {
        accumulate(a.product(j, k), i, false, +1);
        accumulate(a.product(i, j), k, true, -1);
        accumulate(a.product(i, k), j, true, +1);
        bool nonzero = false;
        for (std::size_t l = 0; l < n; ++l)
          if (touched[l] && !acc[l].is_zero()) nonzero = true;
        if (nonzero) out.push_back(ResidualTriple{i, j, k, Vec(acc)});
        for (std::size_t l = 0; l < n; ++l)
          if (touched[l]) {
            acc[l] = 0;
            touched[l] = false;
          }
      }
  return out;
}

std::optional<std::pair<std::size_t, std::size_t>> antisymmetry_witness(const StructureTensor& a) {
  for (std::size_t i = 1; i <= a.dim(); ++i)
    for (std::size_t j = i; j <= a.dim(); ++j)
      if (!(a.product_vec(i, j) + a.product_vec(j, i)).is_zero()) return std::pair{i, j};
  return std::nullopt;
}

bool is_lie(const StructureTensor& a) { return !antisymmetry_witness(a).has_value(); }

MatrixQ right_mul_matrix(const StructureTensor& a, const Vec& x) {
  const std::size_t n = a.dim();
  if (x.dim() != n) throw Error(ErrorCode::DimensionMismatch, "operator element does not match the algebra");
  MatrixQ m(n, n);
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j) {
      if (x[j - 1].is_zero()) continue;
      for (const auto& t : a.product(i, j)) m(t.k - 1, i - 1) += x[j - 1] * t.c;
    }
  return m;
}

namespace {

Rational beta_at(const std::vector<Rational>& betas, std::size_t i) {
  return i >= 5 && i - 5 < betas.size() ? betas[i - 5] : Rational(0);
}

}  // namespace

StructureTensor build_second_type_stage(std::size_t n, const std::vector<Rational>& betas) {
  if (n < 9) throw Error(ErrorCode::IndexOutOfRange, "construction stage needs n >= 9");
  StructureTensor a(n);
  for (std::size_t i = 1; i < n; ++i)
    if (i != 3) a.add(i, 1, i + 1, 1);
  for (std::size_t i = 5; i < n; ++i) a.add(i, 4, i + 1, beta_at(betas, i));
  // [e_i,e_j] = [[e_i,e_{j-1}],e_1] - [e_{i+1},e_{j-1}], column by column.
  const Vec e1 = Vec::basis(n, 1);
  for (std::size_t j = 5; j <= n; ++j)
    for (std::size_t i = 5; i <= n; ++i) {
      Vec v = bracket(a, a.product_vec(i, j - 1), e1);
      if (i + 1 <= n) v -= a.product_vec(i + 1, j - 1);
      a.set(i, j, v);
    }
  return a;
}

bool binomial_product_check(const StructureTensor& a, const std::vector<Rational>& betas) {
  const std::size_t n = a.dim();
  if (n < 9) throw Error(ErrorCode::IndexOutOfRange, "binomial product check needs n >= 9");
  for (std::size_t i = 5; i <= n - 3; ++i)
    for (std::size_t j = 6; j <= n + 3 - i; ++j) {
      const std::size_t m = j - 4;
      Rational sum(0);
      mpz_class binom = 1;
      for (std::size_t k = 0; k <= m; ++k) {
        Rational term = Rational(binom, 1) * beta_at(betas, i + k);
        sum += (k % 2 == 0) ? term : -term;
        binom = binom * (m - k) / (k + 1);
      }
      Vec expected(n);
      expected[i + j - 4] = sum;
      if (a.product_vec(i, j) != expected) return false;
    }
  return true;
}

}  // namespace lnz
