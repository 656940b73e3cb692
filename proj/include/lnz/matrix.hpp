#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "lnz/rational.hpp"

namespace lnz {

/// Coordinate vector over Q. Indexing is 0-based in code; basis(n, i) takes
/// the 1-based basis index used everywhere else in the library.
class Vec {
 public:
  Vec() = default;
  explicit Vec(std::size_t dim) : coords_(dim) {}
  explicit Vec(std::vector<Rational> coords) : coords_(std::move(coords)) {}

  static Vec basis(std::size_t dim, std::size_t index1);

  std::size_t dim() const { return coords_.size(); }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  Rational& operator[](std::size_t i) { return coords_[i]; }
  const std::vector<Rational>& coords() const { return coords_; }

  bool is_zero() const;

  Vec& operator+=(const Vec& o);
  Vec& operator-=(const Vec& o);
  Vec& operator*=(const Rational& c);
  friend Vec operator+(Vec a, const Vec& b) { return a += b; }
  friend Vec operator-(Vec a, const Vec& b) { return a -= b; }
  friend Vec operator*(const Rational& c, Vec v) { return v *= c; }
  friend bool operator==(const Vec&, const Vec&) = default;

 private:
  std::vector<Rational> coords_;
};

/// Dense row-major matrix. Operators act on column vectors.
class MatrixQ {
 public:
  MatrixQ() = default;
  MatrixQ(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static MatrixQ identity(std::size_t n);
  static MatrixQ from_columns(std::span<const Vec> columns);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  Vec column(std::size_t c) const;
  MatrixQ transpose() const;
  bool is_zero() const;

  Vec operator*(const Vec& v) const;
  friend MatrixQ operator*(const MatrixQ& a, const MatrixQ& b);
  friend bool operator==(const MatrixQ&, const MatrixQ&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Exact rank by fraction-free (Bareiss) elimination on the row-scaled
/// integer matrix.
std::size_t rank(const MatrixQ& m);

/// Determinant by fraction-free elimination. Throws DimensionMismatch when
/// the matrix is not square.
Rational determinant(const MatrixQ& m);

std::optional<MatrixQ> inverse(const MatrixQ& m);

/// Jordan block sizes of a nilpotent matrix, weakly decreasing. The number of
/// blocks of size >= k is rank(N^{k-1}) - rank(N^k). Throws NotNilpotent when
/// N^rows != 0 and DimensionMismatch for non-square input.
std::vector<std::size_t> nilpotent_block_sizes(const MatrixQ& n);

/// Subspace of Q^n kept as a reduced row echelon basis (pivot entries 1).
class Subspace {
 public:
  explicit Subspace(std::size_t ambient = 0) : ambient_(ambient) {}

  /// Adds v to the span; returns false when v was already in it.
  bool add(const Vec& v);
  bool contains(const Vec& v) const;
  /// v minus its component along the echelon rows (zero iff v in the span).
  Vec reduce(Vec v) const;

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return rows_.size(); }
  const std::vector<Vec>& basis() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

 private:
  std::size_t ambient_;
  std::vector<Vec> rows_;
  std::vector<std::size_t> pivots_;
};

/// Basis of {x : M x = 0} in reduced echelon form.
std::vector<Vec> kernel(const MatrixQ& m);

}  // namespace lnz
