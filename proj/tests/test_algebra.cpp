#include <doctest.h>

#include "lnz/algebra.hpp"
#include "lnz/catalog.hpp"
#include "lnz/document.hpp"
#include "lnz/error.hpp"
#include "support.hpp"

using namespace lnz;
using namespace lnz::testing;

namespace {

StructureTensor l01(std::size_t n = 9) { return build_second_type(n, SecondTypeParams{0, 0, 0, 0, 0, 0, "0.1"}); }

Vec random_vec(Gen& g, std::size_t n) {
  Vec v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = g.small();
  return v;
}

ErrorCode code_of(const std::string& text) {
  try {
    parse_algebra(text);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("parse succeeded on " << text);
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("bracket on basis vectors reads the table") {
  const StructureTensor a = l01();
  CHECK(bracket(a, Vec::basis(9, 1), Vec::basis(9, 1)) == Vec::basis(9, 2));
  CHECK(bracket(StructureTensor(4), Vec::basis(4, 2), Vec::basis(4, 3)).is_zero());
  const StructureTensor l02 = build_second_type(10, SecondTypeParams{0, 0, 0, 0, 1, -1, "0.2"});
  CHECK(bracket(l02, Vec::basis(10, 5), Vec::basis(10, 4)) == Vec::basis(10, 3));
}

TEST_CASE("bracket is bilinear") {
  Gen g(31);
  for (int trial = 0; trial < 40; ++trial) {
    const auto n = static_cast<std::size_t>(g.integer(2, 6));
    const StructureTensor a = g.tensor(n, 0.3);
    const Vec x = random_vec(g, n), y = random_vec(g, n), z = random_vec(g, n);
    const Rational p = g.small(), q = g.small();
    CHECK(bracket(a, p * x + q * y, z) == p * bracket(a, x, z) + q * bracket(a, y, z));
    CHECK(bracket(a, z, p * x + q * y) == p * bracket(a, z, x) + q * bracket(a, z, y));
    const Table t = to_table(a);
    CHECK(bracket(a, x, y).coords() == naive_bracket(t, x.coords(), y.coords()));
  }
}

TEST_CASE("residual count matches the dense triple loop") {
  Gen g(32);
  for (int trial = 0; trial < 40; ++trial) {
    const auto n = static_cast<std::size_t>(g.integer(1, 5));
    const StructureTensor a = g.coin() ? g.tensor(n, 0.2) : g.graded_tensor(n, 0.4);
    CHECK(leibniz_residual(a).size() == naive_violations(a));
  }
}

TEST_CASE("residual on fixed algebras") {
  CHECK(leibniz_residual(StructureTensor(5)).empty());
  CHECK(leibniz_residual(l01()).empty());

  StructureTensor broken = l01();
  broken.set(1, 4, Vec::basis(9, 2));
  const Residual r = leibniz_residual(broken);
  REQUIRE(r.size() == 2);
  CHECK((r[0].i == 1 && r[0].j == 1 && r[0].k == 4));
  CHECK((r[1].i == 1 && r[1].j == 4 && r[1].k == 1));
}

TEST_CASE("the identity extends bilinearly off the basis") {
  Gen g(33);
  const StructureTensor a = build_second_type(10, SecondTypeParams{1, 0, 0, 0, 1, -1, "1.2"});
  for (int trial = 0; trial < 20; ++trial) {
    const Vec x = random_vec(g, 10), y = random_vec(g, 10), z = random_vec(g, 10);
    CHECK(bracket(a, x, bracket(a, y, z)) == bracket(a, bracket(a, x, y), z) - bracket(a, bracket(a, x, z), y));
  }
}

TEST_CASE("Lie test and antisymmetry witness") {
  CHECK(is_lie(StructureTensor(3)));
  StructureTensor two(2);
  two.add(1, 2, 1, 1);
  two.add(2, 1, 1, -1);
  CHECK(is_lie(two));
  CHECK(leibniz_residual(two).empty());
  const auto w = antisymmetry_witness(l01());
  REQUIRE(w.has_value());
  CHECK(*w == std::pair<std::size_t, std::size_t>{1, 1});
  CHECK_FALSE(is_lie(l01()));
}

TEST_CASE("random Lie brackets from antisymmetrized Leibniz algebras satisfy Jacobi") {
  // The Heisenberg-type algebras [e_i, e_j] = -[e_j, e_i] = c_ij e_n for i < j < n are Lie.
  Gen g(34);
  for (int trial = 0; trial < 20; ++trial) {
    const auto n = static_cast<std::size_t>(g.integer(3, 6));
    StructureTensor a(n);
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (g.coin()) {
          const Rational c = g.nonzero();
          a.add(i, j, n, c);
          a.add(j, i, n, -c);
        }
    CHECK(is_lie(a));
    CHECK(naive_violations(a) == 0);
  }
}

TEST_CASE("right multiplication of e1 in l^{0,1} has chains e1..e3 and e4..e9") {
  const MatrixQ r = right_mul_matrix(l01(), Vec::basis(9, 1));
  MatrixQ expect(9, 9);
  for (std::size_t i = 1; i <= 8; ++i)
    if (i != 3) expect(i, i - 1) = 1;
  CHECK(r == expect);
  CHECK(rank(r) == 7);
  CHECK(right_mul_matrix(StructureTensor(3), Vec::basis(3, 2)).is_zero());

  const StructureTensor l34 = build_first_type(9, FirstTypeParams{34, 0, 0, 0});
  const MatrixQ r34 = right_mul_matrix(l34, Vec::basis(9, 1));
  for (std::size_t i = 1; i <= 8; ++i) CHECK(r34(i, i - 1) == Rational(i == 6 ? 0 : 1));
}

TEST_CASE("binomial formula for the induced products") {
  Gen g(35);
  for (std::size_t n : {9u, 10u, 11u, 12u}) {
    CHECK(binomial_product_check(build_second_type_stage(n, {}), {}));
    const std::vector<Rational> constant(n, Rational(3));
    CHECK(binomial_product_check(build_second_type_stage(n, constant), constant));
    std::vector<Rational> linear;
    for (std::size_t i = 5; i <= n; ++i) linear.emplace_back(long(i));
    CHECK(binomial_product_check(build_second_type_stage(n, linear), linear));
    std::vector<Rational> random;
    for (std::size_t i = 5; i <= n; ++i) random.push_back(g.small());
    CHECK(binomial_product_check(build_second_type_stage(n, random), random));
  }
  CHECK_THROWS_AS(binomial_product_check(StructureTensor(8), {}), Error);
}

TEST_CASE("serialization of small fixed algebras") {
  CHECK(serialize_algebra(StructureTensor(3)) == "{\n  \"dim\": 3,\n  \"table\": []\n}\n");
  const StructureTensor parsed = parse_algebra(serialize_algebra(l01()));
  CHECK(parsed.nonzero_pairs() == 7);
  CHECK(parsed == l01());
}

TEST_CASE("round trip on random tensors and every catalog algebra") {
  Gen g(36);
  for (int trial = 0; trial < 60; ++trial) {
    StructureTensor a = g.tensor(static_cast<std::size_t>(g.integer(1, 6)), 0.2);
    if (g.coin()) a.set_name("t" + std::to_string(trial));
    const std::string text = serialize_algebra(a);
    CHECK(parse_algebra(text) == a);
    CHECK(serialize_algebra(parse_algebra(text)) == text);
  }
  for (const auto& inst : enumerate_catalog({9, 10}, {0, 1, -1, 2, Rational(1, 2)}))
    CHECK(parse_algebra(serialize_algebra(inst.tensor)) == inst.tensor);
}

TEST_CASE("malformed documents are rejected with the right code") {
  CHECK(code_of("{\"dim\":0}") == ErrorCode::SyntaxError);
  CHECK(code_of("{\"dim\":2,") == ErrorCode::SyntaxError);
  CHECK(code_of("{\"dim\":2,\"colour\":1}") == ErrorCode::SyntaxError);
  CHECK(code_of("{\"dim\":2,\"table\":[{\"i\":1,\"j\":1,\"terms\":[[2,1]]}]}") == ErrorCode::SyntaxError);
  CHECK(code_of("{\"dim\":2,\"table\":[{\"i\":1,\"j\":1,\"terms\":[[2,\"0.5\"]]}]}") == ErrorCode::SyntaxError);
  CHECK(code_of("{\"dim\":2,\"table\":[{\"i\":3,\"j\":1,\"terms\":[[2,\"1\"]]}]}") == ErrorCode::IndexError);
  CHECK(code_of("{\"dim\":2,\"table\":[{\"i\":1,\"j\":1,\"terms\":[[0,\"1\"]]}]}") == ErrorCode::IndexError);
  CHECK(code_of("{\"dim\":2,\"table\":[{\"i\":1,\"j\":1,\"terms\":[[2,\"1\"]]},"
                "{\"i\":1,\"j\":1,\"terms\":[[2,\"1\"]]}]}") == ErrorCode::DuplicateEntry);
  CHECK(code_of("{\"dim\":2,\"table\":[{\"i\":1,\"j\":1,\"terms\":[[2,\"1\"],[2,\"3\"]]}]}") ==
        ErrorCode::DuplicateEntry);
  CHECK(code_of("{\"dim\":2,\"table\":[{\"i\":1,\"j\":1,\"terms\":[[2,\"1/0\"]]}]}") == ErrorCode::SyntaxError);
}

TEST_CASE("syntax errors carry a position") {
  try {
    parse_algebra("{\n  \"dim\": 2,\n  \"table\": [ oops ]\n}");
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SyntaxError);
    CHECK(e.line() == 3);
    CHECK(e.column() > 1);
  }
}

TEST_CASE("change documents round-trip") {
  Gen g(37);
  for (int trial = 0; trial < 20; ++trial) {
    const MatrixQ m = to_matrix(g.invertible(static_cast<std::size_t>(g.integer(1, 5))));
    CHECK(parse_change(serialize_change(m)) == m);
  }
  CHECK_THROWS_AS(parse_change("{\"dim\":2,\"matrix\":[[\"1\"]]}"), Error);
}
