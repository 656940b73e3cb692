#include <doctest.h>

#include <algorithm>
#include <set>

#include "lnz/error.hpp"
#include "lnz/poly.hpp"
#include "support.hpp"

using namespace lnz;
using namespace lnz::testing;

namespace {

PolyQ from_roots(const std::vector<Rational>& roots, const Rational& lead = 1) {
  PolyQ p(lead);
  for (const auto& r : roots) p = p * (PolyQ::x() - PolyQ(r));
  return p;
}

PolyQ random_poly(Gen& g, int degree) {
  std::vector<Rational> c;
  for (int i = 0; i <= degree; ++i) c.push_back(g.small());
  c.back() = g.nonzero();
  return PolyQ(c);
}

}  // namespace

TEST_CASE("divmod reconstructs the dividend") {
  Gen g(21);
  for (int trial = 0; trial < 100; ++trial) {
    const PolyQ a = random_poly(g, int(g.integer(0, 6)));
    const PolyQ b = random_poly(g, int(g.integer(0, 3)));
    const auto [q, r] = divmod(a, b);
    PolyQ back = q * b;
    back += r;
    CHECK(back == a);
    CHECK(r.degree() < b.degree());
  }
  CHECK_THROWS_AS(divmod(PolyQ::x(), PolyQ()), Error);
}

TEST_CASE("gcd recovers a planted common factor") {
  Gen g(22);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<Rational> shared, left, right;
    for (int i = 0; i < g.integer(0, 2); ++i) shared.push_back(Rational(g.integer(-9, 9)));
    for (int i = 0; i < g.integer(0, 2); ++i) left.push_back(Rational(g.integer(10, 19)));
    for (int i = 0; i < g.integer(0, 2); ++i) right.push_back(Rational(g.integer(20, 29)));
    auto a_roots = shared, b_roots = shared;
    a_roots.insert(a_roots.end(), left.begin(), left.end());
    b_roots.insert(b_roots.end(), right.begin(), right.end());
    const PolyQ gcd = poly_gcd(from_roots(a_roots, g.nonzero()), from_roots(b_roots, g.nonzero()));
    CHECK(gcd == from_roots(shared));
  }
  CHECK(poly_gcd(PolyQ(), PolyQ()).is_zero());
}

TEST_CASE("rational roots of products of linear factors") {
  Gen g(23);
  for (int trial = 0; trial < 80; ++trial) {
    std::vector<Rational> roots;
    for (int i = 0; i < g.integer(1, 4); ++i) roots.push_back(g.small(5));
    PolyQ p = from_roots(roots, g.nonzero(4));
    if (g.coin()) p = p * PolyQ(std::vector<Rational>{1, 0, 1});  // x^2 + 1, no rational roots
    std::set<Rational> expect(roots.begin(), roots.end());
    bool complete = false;
    const auto found = rational_roots(p, &complete);
    CHECK(complete);
    CHECK(std::vector<Rational>(expect.begin(), expect.end()) == found);
  }
  CHECK_THROWS_AS(rational_roots(PolyQ()), Error);
  CHECK(rational_roots(PolyQ(std::vector<Rational>{-2, 0, 1})).empty());
}

TEST_CASE("resultant of split polynomials is the product of root differences") {
  Gen g(24);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<Rational> a, b;
    for (int i = 0; i < g.integer(1, 3); ++i) a.push_back(g.small());
    for (int i = 0; i < g.integer(1, 3); ++i) b.push_back(g.small());
    Rational expect = 1;
    for (const auto& x : a)
      for (const auto& y : b) expect *= x - y;
    const BiPolyQ p = [&] {
      BiPolyQ acc(PolyQ(1));
      for (const auto& x : a) acc = acc * (BiPolyQ::s() - BiPolyQ(PolyQ(x)));
      return acc;
    }();
    const BiPolyQ q = [&] {
      BiPolyQ acc(PolyQ(1));
      for (const auto& y : b) acc = acc * (BiPolyQ::s() - BiPolyQ(PolyQ(y)));
      return acc;
    }();
    CHECK(resultant(p, q) == PolyQ(expect));
  }
}

TEST_CASE("resultant eliminates s") {
  // s - t against s^2 - 2: the resultant is q(t) = t^2 - 2.
  const BiPolyQ p = BiPolyQ::s() - BiPolyQ(PolyQ::x());
  const BiPolyQ q = BiPolyQ::s() * BiPolyQ::s() - BiPolyQ(PolyQ(2));
  CHECK(resultant(p, q) == PolyQ(std::vector<Rational>{-2, 0, 1}));
  CHECK(resultant(p, BiPolyQ()).is_zero());
  // Common root along s = t: the resultant vanishes identically.
  const BiPolyQ r = (BiPolyQ::s() - BiPolyQ(PolyQ::x())) * (BiPolyQ::s() + BiPolyQ(PolyQ(1)));
  CHECK(resultant(p, r).is_zero());
}

TEST_CASE("resultant commutes with specializing t when leading coefficients are constant") {
  Gen g(25);
  auto bi = [&](int ds) {
    std::vector<PolyQ> c;
    for (int k = 0; k < ds; ++k) c.push_back(random_poly(g, int(g.integer(0, 2))));
    c.push_back(PolyQ(g.nonzero()));
    return BiPolyQ(c);
  };
  auto frozen = [](const BiPolyQ& p, const Rational& t0) {
    const PolyQ at = p.at_t(t0);
    std::vector<PolyQ> c;
    for (int d = 0; d <= at.degree(); ++d) c.push_back(PolyQ(at.coeff(std::size_t(d))));
    return BiPolyQ(c);
  };
  for (int trial = 0; trial < 30; ++trial) {
    const BiPolyQ p = bi(int(g.integer(1, 3))), q = bi(int(g.integer(1, 3)));
    const PolyQ res = resultant(p, q);
    for (int k = 0; k < 3; ++k) {
      const Rational t0 = g.small();
      CHECK(res.eval(t0) == resultant(frozen(p, t0), frozen(q, t0)).coeff(0));
    }
  }
}
