#include "lnz/matrix.hpp"

#include <algorithm>

#include "lnz/error.hpp"

namespace lnz {

Vec Vec::basis(std::size_t dim, std::size_t index1) {
  if (index1 < 1 || index1 > dim) throw Error(ErrorCode::IndexError, "basis index out of range");
  Vec v(dim);
  v[index1 - 1] = 1;
  return v;
}

bool Vec::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Rational& c) { return c.is_zero(); });
}

Vec& Vec::operator+=(const Vec& o) {
  if (o.dim() != dim()) throw Error(ErrorCode::DimensionMismatch, "vector dimensions differ");
  for (std::size_t i = 0; i < dim(); ++i)
    if (!o[i].is_zero()) coords_[i] += o[i];
  return *this;
}

Vec& Vec::operator-=(const Vec& o) {
  if (o.dim() != dim()) throw Error(ErrorCode::DimensionMismatch, "vector dimensions differ");
  for (std::size_t i = 0; i < dim(); ++i)
    if (!o[i].is_zero()) coords_[i] -= o[i];
  return *this;
}

Vec& Vec::operator*=(const Rational& c) {
  for (auto& x : coords_)
    if (!x.is_zero()) x *= c;
  return *this;
}

MatrixQ MatrixQ::identity(std::size_t n) {
  MatrixQ m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

MatrixQ MatrixQ::from_columns(std::span<const Vec> columns) {
  if (columns.empty()) return {};
  MatrixQ m(columns.front().dim(), columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].dim() != m.rows()) throw Error(ErrorCode::DimensionMismatch, "ragged columns");
    for (std::size_t r = 0; r < m.rows(); ++r) m(r, c) = columns[c][r];
  }
  return m;
}

Vec MatrixQ::column(std::size_t c) const {
  Vec v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

MatrixQ MatrixQ::transpose() const {
  MatrixQ t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool MatrixQ::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return x.is_zero(); });
}

Vec MatrixQ::operator*(const Vec& v) const {
  if (v.dim() != cols_) throw Error(ErrorCode::DimensionMismatch, "matrix-vector dimensions differ");
  Vec out(rows_);
  for (std::size_t c = 0; c < cols_; ++c) {
    if (v[c].is_zero()) continue;
    for (std::size_t r = 0; r < rows_; ++r) {
      const Rational& a = (*this)(r, c);
      if (!a.is_zero()) out[r] += a * v[c];
    }
  }
  return out;
}

MatrixQ operator*(const MatrixQ& a, const MatrixQ& b) {
  if (a.cols() != b.rows()) throw Error(ErrorCode::DimensionMismatch, "matrix product dimensions differ");
  MatrixQ out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rational& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        const Rational& y = b(k, j);
        if (!y.is_zero()) out(i, j) += x * y;
      }
    }
  return out;
}

namespace {

using IntRow = std::vector<mpz_class>;

mpz_class lcm_of_denominators(std::span<const Rational> xs) {
  mpz_class l = 1;
  for (const auto& x : xs)
    if (x.den() != 1) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.den().get_mpz_t());
  return l;
}

// Row i scaled by the lcm of its denominators; scales[i] records the factor.
std::vector<IntRow> integer_rows(const MatrixQ& m, std::vector<mpz_class>* scales = nullptr) {
  std::vector<IntRow> rows(m.rows(), IntRow(m.cols()));
  if (scales) scales->assign(m.rows(), 1);
  std::vector<Rational> row(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) row[c] = m(r, c);
    mpz_class l = lcm_of_denominators(row);
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (row[c].is_zero()) continue;
      mpz_class q = l / row[c].den();
      rows[r][c] = row[c].num() * q;
    }
    if (scales) (*scales)[r] = l;
  }
  return rows;
}

// Fraction-free elimination in place. Returns the rank; *swaps counts row
// exchanges and *last_pivot is the final Bareiss divisor (the determinant
// for a nonsingular square input).
std::size_t bareiss(std::vector<IntRow>& a, std::size_t cols, std::size_t* swaps, mpz_class* last_pivot) {
  const std::size_t rows = a.size();
  mpz_class prev = 1;
  std::size_t r = 0;
  std::size_t nswaps = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    if (p != r) {
      std::swap(a[p], a[r]);
      ++nswaps;
    }
    const mpz_class& piv = a[r][c];
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        mpz_class t = piv * a[i][j] - a[i][c] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  if (swaps) *swaps = nswaps;
  if (last_pivot) *last_pivot = prev;
  return r;
}

// Row echelon set of primitive integer vectors, sorted by pivot column.
class IntEchelon {
 public:
  explicit IntEchelon(std::size_t n) : n_(n) {}

  void add(IntRow v) {
    std::size_t lead = leading(v);
    for (std::size_t k = 0; k < rows_.size() && lead < n_; ++k) {
      std::size_t p = pivots_[k];
      if (p < lead) continue;
      if (p > lead) break;
      const IntRow& b = rows_[k];
      mpz_class f = v[p];
      const mpz_class& g = b[p];
      for (std::size_t j = p; j < n_; ++j) v[j] = g * v[j] - f * b[j];
      lead = leading(v);
    }
    if (lead == n_) return;
    make_primitive(v, lead);
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), lead) - pivots_.begin();
    pivots_.insert(pivots_.begin() + pos, lead);
    rows_.insert(rows_.begin() + pos, std::move(v));
  }

  std::size_t rank() const { return rows_.size(); }
  const std::vector<IntRow>& rows() const { return rows_; }

 private:
  std::size_t leading(const IntRow& v) const {
    for (std::size_t j = 0; j < n_; ++j)
      if (v[j] != 0) return j;
    return n_;
  }

  static void make_primitive(IntRow& v, std::size_t lead) {
    mpz_class g = 0;
    for (std::size_t j = lead; j < v.size(); ++j)
      if (v[j] != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v[j].get_mpz_t());
    if (g > 1)
      for (std::size_t j = lead; j < v.size(); ++j)
        if (v[j] != 0) mpz_divexact(v[j].get_mpz_t(), v[j].get_mpz_t(), g.get_mpz_t());
  }

  std::size_t n_;
  std::vector<IntRow> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace

std::size_t rank(const MatrixQ& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  auto rows = integer_rows(m);
  return bareiss(rows, m.cols(), nullptr, nullptr);
}

Rational determinant(const MatrixQ& m) {
  if (!m.is_square()) throw Error(ErrorCode::DimensionMismatch, "determinant of a non-square matrix");
  if (m.rows() == 0) return Rational(1);
  std::vector<mpz_class> scales;
  auto rows = integer_rows(m, &scales);
  std::size_t swaps = 0;
  mpz_class last;
  if (bareiss(rows, m.cols(), &swaps, &last) < m.rows()) return Rational(0);
  mpz_class scale = 1;
  for (const auto& s : scales) scale *= s;
  Rational det(last, scale);
  return swaps % 2 ? -det : det;
}

std::optional<MatrixQ> inverse(const MatrixQ& m) {
  if (!m.is_square()) throw Error(ErrorCode::DimensionMismatch, "inverse of a non-square matrix");
  const std::size_t n = m.rows();
  MatrixQ a = m;
  MatrixQ inv = MatrixQ::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c).is_zero()) ++p;
    if (p == n) return std::nullopt;
    if (p != c)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(p, j), a(c, j));
        std::swap(inv(p, j), inv(c, j));
      }
    Rational s = a(c, c).inverse();
    for (std::size_t j = 0; j < n; ++j) {
      if (!a(c, j).is_zero()) a(c, j) *= s;
      if (!inv(c, j).is_zero()) inv(c, j) *= s;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a(i, c).is_zero()) continue;
      Rational f = a(i, c);
      for (std::size_t j = 0; j < n; ++j) {
        if (!a(c, j).is_zero()) a(i, j) -= f * a(c, j);
        if (!inv(c, j).is_zero()) inv(i, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

std::vector<std::size_t> nilpotent_block_sizes(const MatrixQ& nm) {
  if (!nm.is_square()) throw Error(ErrorCode::DimensionMismatch, "block sizes of a non-square matrix");
  const std::size_t n = nm.rows();
  if (n == 0) return {};

  // Scaling by a nonzero constant does not change the Jordan structure.
  std::vector<Rational> all;
  all.reserve(n * n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) all.push_back(nm(r, c));
  mpz_class l = lcm_of_denominators(all);
  std::vector<IntRow> a(n, IntRow(n));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      if (!nm(r, c).is_zero()) a[r][c] = nm(r, c).num() * (l / nm(r, c).den());

  auto apply = [&](const IntRow& v) {
    IntRow out(n);
    for (std::size_t c = 0; c < n; ++c) {
      if (v[c] == 0) continue;
      for (std::size_t r = 0; r < n; ++r)
        if (a[r][c] != 0) out[r] += a[r][c] * v[c];
    }
    return out;
  };

  // ranks[k] = rank(N^k) = dim N^k(Q^n), tracked through an echelon basis of
  // each image.
  std::vector<std::size_t> ranks{n};
  IntEchelon image(n);
  for (std::size_t c = 0; c < n; ++c) {
    IntRow col(n);
    for (std::size_t r = 0; r < n; ++r) col[r] = a[r][c];
    image.add(std::move(col));
  }
  ranks.push_back(image.rank());
  while (ranks.back() > 0) {
    if (ranks.size() > n || ranks.back() == ranks[ranks.size() - 2])
      throw Error(ErrorCode::NotNilpotent, "matrix is not nilpotent");
    IntEchelon next(n);
    for (const auto& v : image.rows()) next.add(apply(v));
    image = std::move(next);
    ranks.push_back(image.rank());
  }

  std::vector<std::size_t> sizes;
  for (std::size_t k = 1; k < ranks.size(); ++k) {
    std::size_t at_least_k = ranks[k - 1] - ranks[k];
    std::size_t at_least_k1 = k + 1 < ranks.size() ? ranks[k] - ranks[k + 1] : 0;
    for (std::size_t i = 0; i < at_least_k - at_least_k1; ++i) sizes.push_back(k);
  }
  std::sort(sizes.rbegin(), sizes.rend());
  return sizes;
}

Vec Subspace::reduce(Vec v) const {
  if (v.dim() != ambient_) throw Error(ErrorCode::DimensionMismatch, "vector outside the ambient space");
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const Rational f = v[pivots_[k]];
    if (f.is_zero()) continue;
    const Vec& row = rows_[k];
    for (std::size_t j = pivots_[k]; j < ambient_; ++j)
      if (!row[j].is_zero()) v[j] -= f * row[j];
  }
  return v;
}

bool Subspace::contains(const Vec& v) const { return reduce(v).is_zero(); }

bool Subspace::add(const Vec& v) {
  Vec r = reduce(v);
  std::size_t p = 0;
  while (p < ambient_ && r[p].is_zero()) ++p;
  if (p == ambient_) return false;
  r *= r[p].inverse();
  for (auto& row : rows_) {
    const Rational f = row[p];
    if (f.is_zero()) continue;
    for (std::size_t j = p; j < ambient_; ++j)
      if (!r[j].is_zero()) row[j] -= f * r[j];
  }
  auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p) - pivots_.begin();
  pivots_.insert(pivots_.begin() + pos, p);
  rows_.insert(rows_.begin() + pos, std::move(r));
  return true;
}

std::vector<Vec> kernel(const MatrixQ& m) {
  const std::size_t n = m.cols();
  Subspace rowspace(n);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Vec row(n);
    for (std::size_t c = 0; c < n; ++c) row[c] = m(r, c);
    rowspace.add(row);
  }
  const auto& piv = rowspace.pivots();
  Subspace ker(n);
  for (std::size_t f = 0; f < n; ++f) {
    if (std::binary_search(piv.begin(), piv.end(), f)) continue;
    Vec x(n);
    x[f] = 1;
    for (std::size_t k = 0; k < piv.size(); ++k) x[piv[k]] = -rowspace.basis()[k][f];
    ker.add(x);
  }
  return ker.basis();
}

}  // namespace lnz
