#include "lnz/poly.hpp"

#include <algorithm>
#include <set>

#include "lnz/error.hpp"

namespace lnz {

PolyQ::PolyQ(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

PolyQ::PolyQ(const Rational& c) {
  if (!c.is_zero()) c_.push_back(c);
}

PolyQ PolyQ::x() { return PolyQ({Rational(0), Rational(1)}); }

void PolyQ::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Rational PolyQ::eval(const Rational& at) const {
  Rational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc *= at;
    acc += *it;
  }
  return acc;
}

PolyQ PolyQ::monic() const {
  if (is_zero()) return *this;
  Rational inv = lead().inverse();
  std::vector<Rational> c = c_;
  for (auto& x : c) x *= inv;
  return PolyQ(std::move(c));
}

PolyQ& PolyQ::operator+=(const PolyQ& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

PolyQ& PolyQ::operator-=(const PolyQ& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

PolyQ PolyQ::operator-() const {
  std::vector<Rational> c = c_;
  for (auto& x : c) x = -x;
  return PolyQ(std::move(c));
}

PolyQ operator*(const PolyQ& a, const PolyQ& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  }
  return PolyQ(std::move(c));
}

std::pair<PolyQ, PolyQ> divmod(const PolyQ& a, const PolyQ& b) {
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
  if (a.degree() < b.degree()) return {PolyQ(), a};
  std::vector<Rational> rem = a.coeffs();
  std::vector<Rational> quo(a.degree() - b.degree() + 1);
  const Rational inv = b.lead().inverse();
  const auto& bc = b.coeffs();
  for (int k = a.degree() - b.degree(); k >= 0; --k) {
    Rational f = rem[k + b.degree()] * inv;
    quo[k] = f;
    if (f.is_zero()) continue;
    for (std::size_t j = 0; j < bc.size(); ++j) rem[k + j] -= f * bc[j];
  }
  rem.resize(b.degree());
  return {PolyQ(std::move(quo)), PolyQ(std::move(rem))};
}

PolyQ poly_gcd(const PolyQ& p, const PolyQ& q) {
  PolyQ a = p, b = q;
  while (!b.is_zero()) {
    PolyQ r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

namespace {

// Positive divisors of |v| by trial division; false when the search would
// exceed the cap.
bool divisors(const mpz_class& v, unsigned long cap, std::vector<mpz_class>& out) {
  mpz_class a = ::abs(v);
  out.clear();
  mpz_class root = sqrt(a);
  if (root > cap) return false;
  unsigned long lim = root.get_ui();
  std::vector<mpz_class> big;
  for (unsigned long d = 1; d <= lim; ++d) {
    if (mpz_divisible_ui_p(a.get_mpz_t(), d)) {
      out.emplace_back(d);
      mpz_class other = a / d;
      if (other != d) big.push_back(other);
    }
  }
  out.insert(out.end(), big.rbegin(), big.rend());
  return true;
}

}  // namespace

std::vector<Rational> rational_roots(const PolyQ& p, bool* complete, unsigned long divisor_cap) {
  if (p.is_zero()) throw Error(ErrorCode::InvalidArgument, "rational roots of the zero polynomial");
  if (complete) *complete = true;
  std::set<Rational> roots;
  const auto& c = p.coeffs();
  std::size_t low = 0;
  while (c[low].is_zero()) ++low;
  if (low > 0) roots.insert(Rational(0));
  if (static_cast<int>(low) == p.degree()) return {roots.begin(), roots.end()};

  mpz_class l = 1;
  for (std::size_t i = low; i < c.size(); ++i)
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c[i].den().get_mpz_t());
  mpz_class a0 = c[low].num() * (l / c[low].den());
  mpz_class an = c.back().num() * (l / c.back().den());

  std::vector<mpz_class> dn, dd;
  if (!divisors(a0, divisor_cap, dn) || !divisors(an, divisor_cap, dd)) {
    if (complete) *complete = false;
    return {roots.begin(), roots.end()};
  }
  for (const auto& d : dn)
    for (const auto& e : dd)
      for (int sgn : {1, -1}) {
        Rational cand(mpz_class(d * sgn), e);
        if (roots.count(cand)) continue;
        if (p.eval(cand).is_zero()) roots.insert(cand);
      }
  return {roots.begin(), roots.end()};
}

BiPolyQ::BiPolyQ(std::vector<PolyQ> coeffs) : c_(std::move(coeffs)) { trim(); }

BiPolyQ::BiPolyQ(const PolyQ& in_t) {
  if (!in_t.is_zero()) c_.push_back(in_t);
}

BiPolyQ BiPolyQ::s() { return BiPolyQ({PolyQ(), PolyQ(Rational(1))}); }

void BiPolyQ::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

PolyQ BiPolyQ::at_t(const Rational& t) const {
  std::vector<Rational> c;
  c.reserve(c_.size());
  for (const auto& k : c_) c.push_back(k.eval(t));
  return PolyQ(std::move(c));
}

BiPolyQ& BiPolyQ::operator+=(const BiPolyQ& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

BiPolyQ& BiPolyQ::operator-=(const BiPolyQ& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

BiPolyQ operator*(const BiPolyQ& a, const BiPolyQ& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<PolyQ> c(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return BiPolyQ(std::move(c));
}

PolyQ resultant(const BiPolyQ& p, const BiPolyQ& q) {
  if (p.is_zero() || q.is_zero()) return {};
  const int m = p.degree_s(), n = q.degree_s();
  const int size = m + n;
  if (size == 0) return PolyQ(Rational(1));

  // Sylvester matrix, coefficients highest power first.
  std::vector<std::vector<PolyQ>> a(size, std::vector<PolyQ>(size));
  for (int r = 0; r < n; ++r)
    for (int k = 0; k <= m; ++k) a[r][r + k] = p.coeffs()[m - k];
  for (int r = 0; r < m; ++r)
    for (int k = 0; k <= n; ++k) a[n + r][r + k] = q.coeffs()[n - k];

  auto exact_div = [](const PolyQ& x, const PolyQ& y) {
    auto [quo, rem] = divmod(x, y);
    if (!rem.is_zero()) throw Error(ErrorCode::InvalidArgument, "inexact division in Bareiss step");
    return quo;
  };

  PolyQ prev(Rational(1));
  bool negate = false;
  for (int c = 0; c < size; ++c) {
    int piv = c;
    while (piv < size && a[piv][c].is_zero()) ++piv;
    if (piv == size) return {};
    if (piv != c) {
      std::swap(a[piv], a[c]);
      negate = !negate;
    }
    for (int i = c + 1; i < size; ++i) {
      for (int j = c + 1; j < size; ++j) a[i][j] = exact_div(a[c][c] * a[i][j] - a[i][c] * a[c][j], prev);
      a[i][c] = PolyQ();
    }
    prev = a[c][c];
  }
  return negate ? -a[size - 1][size - 1] : a[size - 1][size - 1];
}

}  // namespace lnz
