#include <algorithm>
#include <set>

#include "lnz/error.hpp"
#include "lnz/poly.hpp"
#include "lnz/transform.hpp"

namespace lnz {

const char* to_string(EquivalenceResult::Verdict v) noexcept {
  switch (v) {
    case EquivalenceResult::Verdict::Equivalent: return "Equivalent";
    case EquivalenceResult::Verdict::Distinct: return "Distinct";
    case EquivalenceResult::Verdict::Unknown: return "Unknown";
  }
  return "Unknown";
}

namespace {

using Witness = std::pair<Rational, Rational>;  // (A4, B4) with A1 = 1

bool is_origin(const SecondTypeParams& p) {
  return p.alpha1.is_zero() && p.alpha2.is_zero() && p.alpha3.is_zero() && p.alpha4.is_zero();
}

GradedChange2 change_of(const Witness& w, int epsilon) {
  return GradedChange2{1, w.first, epsilon == 1 ? 1 - w.first : w.second};
}

bool maps_to(const SecondTypeParams& p, const SecondTypeParams& q, const Witness& w) {
  try {
    SecondTypeParams r = param_map(p, change_of(w, p.epsilon));
    return r.alphas() == q.alphas();
  } catch (const Error& e) {
    if (e.code() == ErrorCode::RestrictionViolated) return false;
    throw;
  }
}

/// Map equations with A1 = 1, t = A4, s = B4, denominators cleared.
std::vector<BiPolyQ> equations(const SecondTypeParams& p, const SecondTypeParams& q) {
  const PolyQ t = PolyQ::x();
  const BiPolyQ s = p.epsilon == 1 ? BiPolyQ(PolyQ(Rational(1)) - t) : BiPolyQ::s();
  const PolyQ d = PolyQ(Rational(1)) + PolyQ(p.alpha1) * t + PolyQ(p.alpha3) * t * t;
  const PolyQ e = PolyQ(Rational(1)) + PolyQ(p.alpha2) * t;
  const PolyQ a1(p.alpha1), a2(p.alpha2), a3(p.alpha3), a4(p.alpha4);
  return {
      BiPolyQ(a1 + PolyQ(Rational(2)) * a3 * t) * s - BiPolyQ(PolyQ(q.alpha1) * d),
      BiPolyQ(a2) * s - BiPolyQ(PolyQ(q.alpha2) * e),
      BiPolyQ(a3) * s * s - BiPolyQ(PolyQ(q.alpha3) * d),
      BiPolyQ(a4 + a2 * a3 * t) * s * s - BiPolyQ(PolyQ(q.alpha4) * e * d),
  };
}

/// Rationals of height <= budget in increasing order.
std::vector<Rational> height_grid(unsigned budget) {
  std::set<Rational> g;
  for (long den = 1; den <= static_cast<long>(budget); ++den)
    for (long num = -static_cast<long>(budget); num <= static_cast<long>(budget); ++num) g.insert(Rational(num, den));
  if (g.empty()) g.insert(Rational(0));
  return {g.begin(), g.end()};
}

/// Rational s with every equation vanishing at (t, s).
std::vector<Rational> solve_s(const std::vector<BiPolyQ>& eqs, const Rational& t, const std::vector<Rational>& free_s) {
  PolyQ g;
  for (const auto& e : eqs) g = poly_gcd(g, e.at_t(t));
  if (g.is_zero()) return free_s;
  if (g.degree() == 0) return {};
  return rational_roots(g);
}

std::optional<Witness> least(const SecondTypeParams& p, const SecondTypeParams& q, std::vector<Witness> cands) {
  std::sort(cands.begin(), cands.end());
  for (const auto& w : cands)
    if (maps_to(p, q, w)) return w;
  return std::nullopt;
}

std::optional<Witness> stage_a4_zero(const SecondTypeParams& p, const SecondTypeParams& q, unsigned budget) {
  const std::vector<BiPolyQ> eqs = equations(p, q);
  std::vector<Witness> cands;
  for (const auto& s : solve_s(eqs, 0, height_grid(budget))) cands.emplace_back(Rational(0), s);
  return least(p, q, cands);
}

std::optional<Witness> stage_elimination(const SecondTypeParams& p, const SecondTypeParams& q, unsigned budget) {
  std::vector<BiPolyQ> eqs = equations(p, q);
  std::erase_if(eqs, [](const BiPolyQ& e) { return e.is_zero(); });
  PolyQ g;
  for (const auto& e : eqs)
    if (e.degree_s() == 0) g = poly_gcd(g, e.coeffs()[0]);
  for (std::size_t i = 0; i < eqs.size(); ++i)
    for (std::size_t j = i + 1; j < eqs.size(); ++j)
      if (eqs[i].degree_s() > 0 && eqs[j].degree_s() > 0) g = poly_gcd(g, resultant(eqs[i], eqs[j]));

  const std::vector<Rational> grid = height_grid(budget);
  // A zero gcd leaves t unconstrained; fall back to the grid for t.
  std::vector<Rational> ts;
  if (g.is_zero()) ts = grid;
  else if (g.degree() > 0) ts = rational_roots(g);
  std::vector<Witness> cands;
  for (const auto& t : ts)
    for (const auto& s : solve_s(eqs, t, grid)) cands.emplace_back(t, s);
  return least(p, q, cands);
}

std::optional<Witness> stage_grid(const SecondTypeParams& p, const SecondTypeParams& q, unsigned budget) {
  const std::vector<BiPolyQ> eqs = equations(p, q);
  const std::vector<Rational> grid = height_grid(budget);
  std::vector<Witness> cands;
  for (const auto& t : grid)
    for (const auto& s : solve_s(eqs, t, grid)) cands.emplace_back(t, s);
  return least(p, q, cands);
}

}  // namespace

EquivalenceResult decide_equivalence(const SecondTypeParams& p, const SecondTypeParams& q, unsigned budget) {
  if (p.epsilon != q.epsilon) throw Error(ErrorCode::EpsilonMismatch, "parameters have different epsilon");
  if (p.epsilon != 0 && p.epsilon != 1) throw Error(ErrorCode::InvalidArgument, "epsilon must be 0 or 1");
  for (const auto* x : {&p, &q}) {
    if (x->beta != 0 && x->beta != -1) throw Error(ErrorCode::InvalidArgument, "beta must be 0 or -1");
    if (x->beta == 0 && !is_origin(*x))
      throw Error(ErrorCode::InvalidArgument, "beta = 0 occurs only with alpha = (0,0,0,0)");
  }
  EquivalenceResult r;
  if (p.beta != q.beta) {
    r.verdict = EquivalenceResult::Verdict::Distinct;
    r.invariant = "dim R(ℓ)";
    return r;
  }
  const NullitySignature sp = nullity_signature(p), sq = nullity_signature(q);
  for (std::size_t i = 0; i < sp.zero.size(); ++i)
    if (sp.zero[i].second != sq.zero[i].second) {
      r.verdict = EquivalenceResult::Verdict::Distinct;
      r.invariant = sp.zero[i].first;
      return r;
    }
  if (p.alphas() == q.alphas()) {
    r.verdict = EquivalenceResult::Verdict::Equivalent;
    r.witness = GradedChange2{1, 0, 1};
    r.stage = "identity";
    return r;
  }
  const std::pair<const char*, std::optional<Witness> (*)(const SecondTypeParams&, const SecondTypeParams&, unsigned)>
      stages[] = {{"A4 = 0", stage_a4_zero}, {"elimination", stage_elimination}, {"grid", stage_grid}};
  for (const auto& [name, run] : stages)
    if (auto w = run(p, q, budget)) {
      r.verdict = EquivalenceResult::Verdict::Equivalent;
      r.witness = change_of(*w, p.epsilon);
      r.stage = name;
      return r;
    }
  return r;
}

}  // namespace lnz
