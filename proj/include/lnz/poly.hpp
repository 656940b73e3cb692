#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "lnz/rational.hpp"

namespace lnz {

/// Univariate polynomial over Q, coefficients lowest degree first. The zero
/// polynomial has no coefficients; otherwise the leading coefficient is
/// nonzero.
class PolyQ {
 public:
  PolyQ() = default;
  explicit PolyQ(std::vector<Rational> coeffs);
  PolyQ(const Rational& c);  // NOLINT(implicit) constant polynomial
  static PolyQ x();

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const Rational& lead() const { return c_.back(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }

  Rational eval(const Rational& at) const;
  PolyQ monic() const;

  PolyQ& operator+=(const PolyQ& o);
  PolyQ& operator-=(const PolyQ& o);
  friend PolyQ operator+(PolyQ a, const PolyQ& b) { return a += b; }
  friend PolyQ operator-(PolyQ a, const PolyQ& b) { return a -= b; }
  friend PolyQ operator*(const PolyQ& a, const PolyQ& b);
  PolyQ operator-() const;
  friend bool operator==(const PolyQ&, const PolyQ&) = default;

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Quotient and remainder; throws DivisionByZero for a zero divisor.
std::pair<PolyQ, PolyQ> divmod(const PolyQ& a, const PolyQ& b);

/// Monic gcd over Q; gcd(0, 0) = 0.
PolyQ poly_gcd(const PolyQ& p, const PolyQ& q);

/// Distinct rational roots in increasing order, by the p/q divisor test on the
/// integer-scaled polynomial. Integers whose divisors would need trial division
/// beyond `divisor_cap` are skipped, so the result may then be incomplete;
/// *complete reports which happened. Throws InvalidArgument for p = 0.
std::vector<Rational> rational_roots(const PolyQ& p, bool* complete = nullptr,
                                     unsigned long divisor_cap = 1000000);

/// Polynomial in s whose coefficients are polynomials in t; coeffs[k] is the
/// coefficient of s^k.
class BiPolyQ {
 public:
  BiPolyQ() = default;
  explicit BiPolyQ(std::vector<PolyQ> coeffs);
  BiPolyQ(const PolyQ& in_t);  // NOLINT(implicit) constant in s
  static BiPolyQ s();

  int degree_s() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<PolyQ>& coeffs() const { return c_; }

  /// Substitutes t, leaving a polynomial in s.
  PolyQ at_t(const Rational& t) const;

  BiPolyQ& operator+=(const BiPolyQ& o);
  BiPolyQ& operator-=(const BiPolyQ& o);
  friend BiPolyQ operator+(BiPolyQ a, const BiPolyQ& b) { return a += b; }
  friend BiPolyQ operator-(BiPolyQ a, const BiPolyQ& b) { return a -= b; }
  friend BiPolyQ operator*(const BiPolyQ& a, const BiPolyQ& b);
  friend bool operator==(const BiPolyQ&, const BiPolyQ&) = default;

 private:
  void trim();
  std::vector<PolyQ> c_;
};

/// Resultant with respect to s (determinant of the Sylvester matrix, computed
/// fraction-free over Q[t]). Zero if either input is zero.
PolyQ resultant(const BiPolyQ& p, const BiPolyQ& q);

}  // namespace lnz
