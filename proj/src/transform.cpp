#include "lnz/transform.hpp"

#include <random>

#include "lnz/error.hpp"

namespace lnz {

namespace {

[[noreturn]] void restriction(const std::string& factor) {
  throw Error(ErrorCode::RestrictionViolated, "restriction violated: " + factor + " = 0");
}

void require_nonzero(const Rational& v, const char* factor) {
  if (v.is_zero()) restriction(factor);
}

Vec linear(std::size_t n, const Rational& c1, std::size_t i1, const Rational& c2, std::size_t i2) {
  Vec v(n);
  v[i1 - 1] += c1;
  v[i2 - 1] += c2;
  return v;
}

[[noreturn]] void not_catalog(const std::string& what) { throw Error(ErrorCode::NotInCatalogForm, what); }

bool same_table(const StructureTensor& a, StructureTensor b) {
  b.set_name(a.name());
  return a == b;
}

}  // namespace

StructureTensor apply_change(const StructureTensor& a, const BasisChange& p) {
  const std::size_t n = a.dim();
  const MatrixQ& m = p.matrix;
  if (m.rows() != n || m.cols() != n) throw Error(ErrorCode::DimensionMismatch, "basis change does not match the algebra");
  auto inv = inverse(m);
  if (!inv) throw Error(ErrorCode::SingularChange, "basis change matrix is singular");
  std::vector<Vec> cols;
  for (std::size_t c = 0; c < n; ++c) cols.push_back(m.column(c));
  StructureTensor out(n, a.name());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vec v = bracket(a, cols[i], cols[j]);
      if (v.is_zero()) continue;
      out.set(i + 1, j + 1, *inv * v);
    }
  return out;
}

BasisChange completed_basis(const StructureTensor& a, const GradedChange2& g, int epsilon) {
  const std::size_t n = a.dim();
  if (n < 6) throw Error(ErrorCode::DimensionTooSmall, "graded change needs n >= 6");
  const Vec x = linear(n, g.a1, 1, g.a4, 4);
  const Rational b4 = epsilon == 1 ? g.a1 - g.a4 : g.b4;
  std::vector<Vec> cols(n);
  cols[0] = x;
  cols[1] = bracket(a, cols[0], x);
  cols[2] = bracket(a, cols[1], x);
  cols[3] = b4 * Vec::basis(n, 4);
  for (std::size_t k = 4; k < n; ++k) cols[k] = bracket(a, cols[k - 1], x);
  return BasisChange{MatrixQ::from_columns(cols)};
}

BasisChange completed_basis(const StructureTensor& a, const FirstTypeChange& g) {
  const std::size_t n = a.dim();
  if (n < 6) throw Error(ErrorCode::DimensionTooSmall, "graded change needs n >= 6");
  const Vec x = linear(n, g.a1, 1, g.a, n - 2);
  std::vector<Vec> cols(n);
  cols[0] = x;
  for (std::size_t k = 1; k < n - 3; ++k) cols[k] = bracket(a, cols[k - 1], x);
  cols[n - 3] = g.b * Vec::basis(n, n - 2);
  cols[n - 2] = bracket(a, cols[n - 3], x);
  cols[n - 1] = bracket(a, cols[n - 2], x);
  return BasisChange{MatrixQ::from_columns(cols)};
}

SecondTypeParams extract_second_type(const StructureTensor& a, int epsilon) {
  const std::size_t n = a.dim();
  if (n < 9) not_catalog("second-type form needs n >= 9");
  SecondTypeParams p;
  p.epsilon = epsilon;
  p.alpha1 = a.product_vec(1, 4)[1];
  p.alpha2 = a.product_vec(2, 4)[2];
  p.alpha3 = a.product_vec(4, 4)[1];
  p.alpha4 = a.product_vec(5, 4)[2];
  p.beta = a.product_vec(1, 4)[4];
  if (p.beta != 0 && p.beta != -1) not_catalog("[e1,e4] has e5 coefficient " + p.beta.str());
  StructureTensor expected;
  try {
    expected = build_second_type(n, p, false);
  } catch (const Error& e) {
    not_catalog(e.what());
  }
  if (!same_table(a, expected)) not_catalog("table differs from the second-type form with the read parameters");
  return p;
}

BranchSlots extract_first_type(const StructureTensor& a, FirstTypeBranch branch) {
  const std::size_t n = a.dim();
  if (n < 9) not_catalog("first-type form needs n >= 9");
  BranchSlots s;
  s[0] = a.product_vec(1, n - 2)[1];
  if (branch == FirstTypeBranch::A) {
    s[1] = a.product_vec(1, n - 2)[n - 2];
    s[2] = a.product_vec(n - 2, n - 2)[n - 2];
  } else {
    s[1] = a.product_vec(n - 2, n - 1)[n - 1];
    s[2] = a.product_vec(1, n - 1)[n - 1];
  }
  if (!same_table(a, build_first_type_branch(n, branch, s[0], s[1], s[2])))
    not_catalog("table differs from the first-type form with the read parameters");
  return s;
}

namespace {

SecondTypeParams map_common(const SecondTypeParams& p, const Rational& a1, const Rational& a4, const Rational& b4) {
  const Rational &x1 = p.alpha1, &x2 = p.alpha2, &x3 = p.alpha3, &x4 = p.alpha4;
  const Rational d = a1 * a1 + x1 * a1 * a4 + x3 * a4 * a4;
  const Rational e = a1 + x2 * a4;
  require_nonzero(a1, "A1");
  require_nonzero(e, "A1 + alpha2*A4");
  require_nonzero(d, "A1^2 + alpha1*A1*A4 + alpha3*A4^2");
  SecondTypeParams q = p;
  q.label.clear();
  q.alpha1 = (x1 * a1 + 2 * x3 * a4) * b4 / d;
  q.alpha2 = x2 * b4 / e;
  q.alpha3 = x3 * b4 * b4 / d;
  q.alpha4 = (x4 * a1 + x2 * x3 * a4) * b4 * b4 / (e * d);
  return q;
}

}  // namespace

SecondTypeParams param_map_case1(const SecondTypeParams& p, const GradedChange2& g) {
  if (p.epsilon != 0) throw Error(ErrorCode::EpsilonMismatch, "Case 1 map applies to epsilon = 0");
  require_nonzero(g.b4, "B4");
  return map_common(p, g.a1, g.a4, g.b4);
}

SecondTypeParams param_map_case2(const SecondTypeParams& p, const GradedChange2& g) {
  if (p.epsilon != 1) throw Error(ErrorCode::EpsilonMismatch, "Case 2 map applies to epsilon = 1");
  const Rational s = g.a1 - g.a4;
  require_nonzero(s, "A1 - A4");
  return map_common(p, g.a1, g.a4, s);
}

SecondTypeParams param_map(const SecondTypeParams& p, const GradedChange2& g) {
  return p.epsilon == 1 ? param_map_case2(p, g) : param_map_case1(p, g);
}

BranchSlots param_map_type1_a(const BranchSlots& p, const FirstTypeChange& g) {
  const Rational &x1 = p[0], &x2 = p[1], &b2 = p[2];
  const Rational u = g.a1 + x1 * g.a;
  const Rational w = g.a1 + b2 * g.a;
  require_nonzero(g.a1, "A1");
  require_nonzero(g.b, "B_{n-2}");
  require_nonzero(u, "A1 + alpha1*A_{n-2}");
  require_nonzero(w, "A1 + beta2*A_{n-2}");
  return {x1 * g.b / u, g.a1 * (x2 * g.a1 + b2 * g.a - x1 * g.a) / (u * w), b2 * g.b / w};
}

BranchSlots param_map_type1_b(const BranchSlots& p, const FirstTypeChange& g) {
  const Rational &x1 = p[0], &b2 = p[1], &a2 = p[2];
  const Rational u = g.a1 + x1 * g.a;
  const Rational w = g.a1 - b2 * g.a;
  require_nonzero(g.a1, "A1");
  require_nonzero(g.b, "B_{n-2}");
  require_nonzero(u, "A1 + alpha1*A_{n-2}");
  require_nonzero(w, "A1 - b2*A_{n-2}");
  return {x1 * g.b / u, b2 * g.b / w, (a2 * g.a1 + b2 * g.a) / w};
}

std::string NullitySignature::str() const {
  std::string out;
  for (const auto& [name, z] : zero) out += (out.empty() ? "" : ", ") + name + (z ? " = 0" : " ≠ 0");
  return out;
}

NullitySignature nullity_signature(const SecondTypeParams& p) {
  const Rational &x1 = p.alpha1, &x2 = p.alpha2, &x3 = p.alpha3, &x4 = p.alpha4;
  NullitySignature s;
  s.zero.emplace_back("α₁²−4α₃", (x1 * x1 - 4 * x3).is_zero());
  s.zero.emplace_back("α₁α₂−2α₃", (x1 * x2 - 2 * x3).is_zero());
  s.zero.emplace_back("α₁α₂−2α₄", (x1 * x2 - 2 * x4).is_zero());
  if (p.epsilon == 1) s.zero.emplace_back("α₁+2α₃", (x1 + 2 * x3).is_zero());
  return s;
}

NullitySignature nullity_signature(const BranchSlots& p, FirstTypeBranch branch) {
  NullitySignature s;
  if (branch == FirstTypeBranch::A) {
    s.zero.emplace_back("α₁−β₂", (p[0] - p[2]).is_zero());
    if (p[0].is_zero()) s.zero.emplace_back("1−α₂", (1 - p[1]).is_zero());
    if (p[2].is_zero()) s.zero.emplace_back("1+α₂", (1 + p[1]).is_zero());
  } else {
    s.zero.emplace_back("1+a₂", (1 + p[2]).is_zero());
    s.zero.emplace_back("α₁+b₂", (p[0] + p[1]).is_zero());
  }
  return s;
}

bool verify_homogeneity(std::size_t trials, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto small = [&] { return Rational(static_cast<long>(rng() % 11) - 5, static_cast<long>(rng() % 4) + 1); };
  std::size_t done = 0;
  for (std::size_t attempt = 0; done < trials && attempt < 100 * trials; ++attempt) {
    SecondTypeParams p{0, small(), small(), small(), small(), -1, ""};
    GradedChange2 g{small(), small(), small()};
    Rational c = small();
    if (c.is_zero()) continue;
    SecondTypeParams lhs;
    try {
      lhs = param_map_case1(p, g);
    } catch (const Error&) {
      continue;
    }
    SecondTypeParams rhs = param_map_case1(p, GradedChange2{c * g.a1, c * g.a4, c * g.b4});
    if (!(lhs == rhs)) return false;
    ++done;
  }
  return done == trials;
}

}  // namespace lnz
