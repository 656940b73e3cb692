#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lnz/matrix.hpp"
#include "lnz/rational.hpp"

namespace lnz {

struct Term {
  std::size_t k;
  Rational c;
  friend bool operator==(const Term&, const Term&) = default;
};

/// [e_i, e_j] = sum of c e_k over the entry (i, j). Indices are 1-based.
/// Every entry is sorted by k and free of zero coefficients.
class StructureTensor {
 public:
  StructureTensor() = default;
  explicit StructureTensor(std::size_t dim, std::string name = {});

  std::size_t dim() const { return dim_; }
  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  const std::vector<Term>& product(std::size_t i, std::size_t j) const;
  Vec product_vec(std::size_t i, std::size_t j) const;

  /// Accumulates c e_k into [e_i, e_j].
  void add(std::size_t i, std::size_t j, std::size_t k, const Rational& c);
  void set(std::size_t i, std::size_t j, const Vec& v);
  void clear(std::size_t i, std::size_t j);

  std::size_t nonzero_pairs() const;

  friend bool operator==(const StructureTensor&, const StructureTensor&) = default;

 private:
  std::size_t slot(std::size_t i, std::size_t j) const;

  std::size_t dim_ = 0;
  std::string name_;
  std::vector<std::vector<Term>> table_;
};

struct ResidualTriple {
  std::size_t i, j, k;
  Vec value;
};

/// [e_i,[e_j,e_k]] - [[e_i,e_j],e_k] + [[e_i,e_k],e_j] for every triple where
/// it is nonzero.
using Residual = std::vector<ResidualTriple>;

Vec bracket(const StructureTensor& a, const Vec& x, const Vec& y);

Residual leibniz_residual(const StructureTensor& a);

/// First pair (i, j), i <= j, with [e_i,e_j] != -[e_j,e_i].
std::optional<std::pair<std::size_t, std::size_t>> antisymmetry_witness(const StructureTensor& a);
bool is_lie(const StructureTensor& a);

/// Column i is [e_i, x].
MatrixQ right_mul_matrix(const StructureTensor& a, const Vec& x);

/// The intermediate algebra of the second-type construction: the chain
/// [e_i,e_1] = e_{i+1} (i != 3), [e_i,e_4] = beta_i e_{i+1} for 5 <= i <= n-1,
/// and [e_i,e_j] for i, j >= 5 generated from those by the Leibniz identity
/// with e_1. betas[0] is beta_5; missing trailing values are zero.
StructureTensor build_second_type_stage(std::size_t n, const std::vector<Rational>& betas);

/// Checks [e_i,e_j] = (sum_k (-1)^k C(j-4,k) beta_{i+k}) e_{i+j-3} for
/// 5 <= i <= n-3, 6 <= j <= n+3-i. Throws IndexOutOfRange for n < 9.
bool binomial_product_check(const StructureTensor& a, const std::vector<Rational>& betas);

}  // namespace lnz
