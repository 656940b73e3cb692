#include <doctest.h>

#include "lnz/catalog.hpp"
#include "lnz/error.hpp"
#include "lnz/transform.hpp"
#include "support.hpp"

using namespace lnz;
using namespace lnz::testing;

namespace {

SecondTypeParams second(int eps, Rational a1, Rational a2, Rational a3, Rational a4) {
  return SecondTypeParams{eps, a1, a2, a3, a4, -1, ""};
}

template <class F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::InvalidArgument;
}

bool same_table(const StructureTensor& a, const Table& t) {
  const Table mine = to_table(a);
  return mine == t;
}

Dense to_dense(const MatrixQ& m) {
  Dense d(m.rows(), std::vector<Rational>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) d[r][c] = m(r, c);
  return d;
}

}  // namespace

TEST_CASE("apply_change agrees with the dense transport") {
  Gen g(51);
  for (int trial = 0; trial < 40; ++trial) {
    const auto n = static_cast<std::size_t>(g.integer(1, 5));
    const StructureTensor a = g.tensor(n, 0.3);
    const Dense p = g.invertible(n);
    CHECK(same_table(apply_change(a, BasisChange{to_matrix(p)}), naive_transport(a, p)));
  }
}

TEST_CASE("apply_change fixed cases and errors") {
  const StructureTensor l01 = build_second_type(9, SecondTypeParams{0, 0, 0, 0, 0, 0, "0.1"});
  CHECK(apply_change(l01, BasisChange{MatrixQ::identity(9)}) == l01);
  MatrixQ swap(3, 3);
  swap(0, 1) = swap(1, 0) = swap(2, 2) = 1;
  CHECK(apply_change(StructureTensor(3), BasisChange{swap}) == StructureTensor(3));
  CHECK(code_of([] { apply_change(StructureTensor(2), BasisChange{MatrixQ(2, 2)}); }) == ErrorCode::SingularChange);
  CHECK(code_of([] { apply_change(StructureTensor(2), BasisChange{MatrixQ::identity(3)}); }) ==
        ErrorCode::DimensionMismatch);
}

TEST_CASE("graded change on l^{0,3} at n = 10") {
  const StructureTensor a = build_second_type(10, second(0, 1, 0, 0, 1));
  const StructureTensor moved = apply_change(a, completed_basis(a, GradedChange2{1, 0, 2}, 0));
  CHECK(extract_second_type(moved, 0) == second(0, 2, 0, 0, 4));
  CHECK(apply_change(a, completed_basis(a, GradedChange2{}, 0)) == a);
}

TEST_CASE("Case 1 closed form on fixed points") {
  CHECK(param_map_case1(second(0, 1, 0, 0, 1), {1, 0, 2}) == second(0, 2, 0, 0, 4));
  CHECK(param_map_case1(second(0, 3, -1, 2, 5), {}) == second(0, 3, -1, 2, 5));
  CHECK(param_map_case1(second(0, 0, 0, 0, 0), {2, 1, 3}) == second(0, 0, 0, 0, 0));
  CHECK(code_of([] { param_map_case1(second(1, 0, 0, 0, 0), {}); }) == ErrorCode::EpsilonMismatch);
}

TEST_CASE("Case 2 closed form on fixed points") {
  CHECK(param_map_case2(second(1, 0, 0, 0, 1), {2, 1, 1}) == second(1, 0, 0, 0, Rational(1, 4)));
  CHECK(param_map_case2(second(1, 2, 1, 3, 1), {1, 0, 1}) == second(1, 2, 1, 3, 1));
  CHECK(code_of([] { param_map_case2(second(1, 0, 0, 0, 1), {2, 2, 1}); }) == ErrorCode::RestrictionViolated);
  try {
    param_map_case2(second(1, 0, 0, 0, 1), {2, 2, 1});
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("A1 - A4") != std::string::npos);
  }
}

TEST_CASE("first-type closed forms on fixed points") {
  CHECK(param_map_type1_a({1, 0, 2}, {1, 1, 2}) == BranchSlots{1, Rational(1, 6), Rational(4, 3)});
  CHECK(param_map_type1_a({1, 0, 2}, {}) == BranchSlots{1, 0, 2});
  CHECK(param_map_type1_b({0, 1, -1}, {2, 1, 1}) == BranchSlots{0, 1, -1});
  CHECK(param_map_type1_b({0, 1, -1}, {}) == BranchSlots{0, 1, -1});
  CHECK(code_of([] { param_map_type1_a({-1, 0, 2}, {1, 1, 1}); }) == ErrorCode::RestrictionViolated);
  CHECK(code_of([] { param_map_type1_b({0, 2, -1}, {2, 1, 1}); }) == ErrorCode::RestrictionViolated);
}

TEST_CASE("closed forms equal direct recomputation and preserve nullity signatures") {
  Gen g(52);
  int checked[4] = {0, 0, 0, 0};
  for (int trial = 0; trial < 400; ++trial) {
    const int which = trial % 4;
    const GradedChange2 g2{g.nonzero(), g.small(), g.nonzero()};
    const FirstTypeChange g1{g.nonzero(), g.small(), g.nonzero()};
    try {
      if (which < 2) {
        const int eps = which;
        const SecondTypeParams p = second(eps, g.small(), g.small(), g.small(), g.small());
        const StructureTensor a = build_second_type(10, p, false);
        const SecondTypeParams closed = param_map(p, g2);
        CHECK(extract_second_type(apply_change(a, completed_basis(a, g2, eps)), eps) == closed);
        CHECK(nullity_signature(closed) == nullity_signature(p));
      } else {
        const auto branch = which == 2 ? FirstTypeBranch::A : FirstTypeBranch::B;
        const BranchSlots p{g.small(), g.small(), g.small()};
        const StructureTensor a = build_first_type_branch(9, branch, p[0], p[1], p[2]);
        const BranchSlots closed = which == 2 ? param_map_type1_a(p, g1) : param_map_type1_b(p, g1);
        CHECK(extract_first_type(apply_change(a, completed_basis(a, g1)), branch) == closed);
        CHECK(nullity_signature(closed, branch) == nullity_signature(p, branch));
      }
      ++checked[which];
    } catch (const Error& e) {
      REQUIRE(e.code() == ErrorCode::RestrictionViolated);
    }
  }
  for (int c : checked) CHECK(c > 50);
}

TEST_CASE("completed bases are graded changes") {
  const StructureTensor a = build_second_type(10, second(0, 1, 2, 3, 4), false);
  const Dense p = to_dense(completed_basis(a, GradedChange2{2, 1, 3}, 0).matrix);
  // e'_1 = 2e1 + e4 and e'_4 = 3e4.
  CHECK(p[0][0] == 2);
  CHECK(p[3][0] == 1);
  CHECK(p[3][3] == 3);
  CHECK(naive_rank(p) == 10);
}

TEST_CASE("extraction rejects tables outside catalog form") {
  StructureTensor a = build_second_type(10, second(0, 1, 0, 0, 1));
  a.add(2, 2, 9, 1);
  CHECK(code_of([&] { extract_second_type(a, 0); }) == ErrorCode::NotInCatalogForm);
}

TEST_CASE("nullity signatures on fixed points") {
  const auto zero = nullity_signature(second(0, 0, 0, 0, 0));
  for (const auto& [name, z] : zero.zero) CHECK(z);
  const auto l04 = nullity_signature(second(0, 1, 0, Rational(1, 4), 0));
  const auto l05 = nullity_signature(second(0, 0, 0, 1, 0));
  CHECK_FALSE(l04 == l05);
  CHECK(nullity_signature(second(1, 0, 0, 0, 0)).zero.size() == 4);
}

TEST_CASE("homogeneity of the Case 1 map") {
  CHECK(verify_homogeneity(100, 3));
  const auto p = second(0, 1, 1, 1, 1);
  CHECK(param_map_case1(p, {1, 1, 1}) == param_map_case1(p, {3, 3, 3}));
  const auto q = second(0, 2, 1, 1, 0);
  CHECK(param_map_case1(q, {1, 0, 2}) == param_map_case1(q, {-1, 0, -2}));
}

TEST_CASE("equivalence decisions on fixed pairs") {
  using V = EquivalenceResult::Verdict;
  const auto same = decide_equivalence(second(0, 1, 2, 3, 4), second(0, 1, 2, 3, 4), 4);
  CHECK(same.verdict == V::Equivalent);
  CHECK(*same.witness == GradedChange2{});

  const auto distinct = decide_equivalence(second(0, 1, 0, Rational(1, 4), 0), second(0, 0, 0, 1, 0), 4);
  CHECK(distinct.verdict == V::Distinct);
  CHECK(distinct.invariant == "α₁²−4α₃");

  const auto eq = decide_equivalence(second(0, 1, 0, 0, 1), second(0, 2, 0, 0, 4), 4);
  REQUIRE(eq.verdict == V::Equivalent);
  CHECK(*eq.witness == GradedChange2{1, 0, 2});

  CHECK(code_of([] { decide_equivalence(second(0, 0, 0, 0, 0), second(1, 0, 0, 0, 0), 2); }) ==
        ErrorCode::EpsilonMismatch);
}

TEST_CASE("equivalence is sound on forward-generated pairs") {
  Gen g(53);
  using V = EquivalenceResult::Verdict;
  int found = 0;
  for (int trial = 0; trial < 30; ++trial) {
    const int eps = trial % 2;
    const SecondTypeParams p = second(eps, g.small(2), g.small(2), g.small(2), g.small(2));
    const GradedChange2 hidden{1, g.small(2), g.nonzero(2)};
    SecondTypeParams q;
    try {
      q = param_map(p, hidden);
    } catch (const Error&) {
      continue;
    }
    const auto r = decide_equivalence(p, q, 4);
    CHECK(r.verdict != V::Distinct);
    if (r.verdict != V::Equivalent) continue;
    ++found;
    const StructureTensor a = build_second_type(10, p, false);
    CHECK(extract_second_type(apply_change(a, completed_basis(a, *r.witness, eps)), eps) == q);
  }
  CHECK(found > 15);
}
