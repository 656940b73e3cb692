#include "lnz/analysis.hpp"

#include <random>

#include "lnz/error.hpp"

namespace lnz {

std::vector<std::size_t> CentralSeries::dims() const {
  std::vector<std::size_t> d;
  d.reserve(terms.size());
  for (const auto& t : terms) d.push_back(t.size());
  return d;
}

CentralSeries lower_central_series(const StructureTensor& a) {
  const std::size_t n = a.dim();
  CentralSeries s;
  Subspace whole(n);
  for (std::size_t i = 1; i <= n; ++i) whole.add(Vec::basis(n, i));
  s.terms.push_back(whole.basis());
  while (!s.terms.back().empty()) {
    Subspace next(n);
    for (const auto& u : s.terms.back())
      for (std::size_t j = 1; j <= n; ++j) next.add(bracket(a, u, Vec::basis(n, j)));
    if (next.dim() == s.terms.back().size()) return s;
    s.terms.push_back(next.basis());
  }
  s.nilpotent = true;
  return s;
}

std::size_t nilindex(const StructureTensor& a) {
  CentralSeries s = lower_central_series(a);
  if (!s.nilpotent) throw Error(ErrorCode::NonNilpotent, "algebra is not nilpotent");
  return s.terms.size();
}

GradedDecomposition natural_gradation(const StructureTensor& a) {
  const std::size_t n = a.dim();
  CentralSeries s = lower_central_series(a);
  if (!s.nilpotent) throw Error(ErrorCode::NonNilpotent, "natural gradation needs a nilpotent algebra");
  GradedDecomposition g;
  for (std::size_t i = 0; i + 1 < s.terms.size(); ++i) {
    Subspace below(n);
    for (const auto& v : s.terms[i + 1]) below.add(v);
    std::vector<Vec> section;
    for (const auto& v : s.terms[i]) {
      Vec r = below.reduce(v);
      if (r.is_zero()) continue;
      below.add(r);
      section.push_back(r);
    }
    g.dims.push_back(section.size());
    g.pieces.push_back(std::move(section));
  }

  std::vector<Vec> basis;
  std::vector<std::size_t> piece_of;
  for (std::size_t p = 0; p < g.pieces.size(); ++p)
    for (const auto& v : g.pieces[p]) {
      basis.push_back(v);
      piece_of.push_back(p + 1);
    }
  g.induced = StructureTensor(n);
  if (n == 0) return g;
  const MatrixQ to_new = *inverse(MatrixQ::from_columns(basis));
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v) {
      const std::size_t target = piece_of[u] + piece_of[v];
      if (target > g.pieces.size()) continue;
      Vec coords = to_new * bracket(a, basis[u], basis[v]);
      for (std::size_t k = 0; k < n; ++k)
        if (piece_of[k] == target) g.induced.add(u + 1, v + 1, k + 1, coords[k]);
    }
  return g;
}

bool grading_law_holds(const StructureTensor& a, const GradedDecomposition& g) {
  const std::size_t n = a.dim();
  CentralSeries s = lower_central_series(a);
  for (std::size_t i = 1; i <= g.pieces.size(); ++i)
    for (std::size_t j = 1; j <= g.pieces.size(); ++j) {
      Subspace target(n);
      if (i + j - 1 < s.terms.size())
        for (const auto& v : s.terms[i + j - 1]) target.add(v);
      for (const auto& u : g.pieces[i - 1])
        for (const auto& v : g.pieces[j - 1])
          if (!target.contains(bracket(a, u, v))) return false;
    }
  return true;
}

std::string CharSequence::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? "," : "") + std::to_string(parts[i]);
  return out + ")";
}

CharSequence char_sequence_at(const StructureTensor& a, const Vec& x, const Subspace& derived) {
  if (x.dim() != a.dim()) throw Error(ErrorCode::DimensionMismatch, "element does not match the algebra");
  if (derived.contains(x)) throw Error(ErrorCode::ElementInDerivedSubalgebra, "element lies in L^2");
  return CharSequence{nilpotent_block_sizes(right_mul_matrix(a, x))};
}

CharSequence char_sequence_at(const StructureTensor& a, const Vec& x) {
  CentralSeries s = lower_central_series(a);
  Subspace derived(a.dim());
  if (s.terms.size() > 1)
    for (const auto& v : s.terms[1]) derived.add(v);
  else
    for (const auto& v : s.terms[0]) derived.add(v);
  return char_sequence_at(a, x, derived);
}

CharSequenceEstimate char_sequence_estimate(const StructureTensor& a, std::size_t budget, std::uint64_t seed) {
  const std::size_t n = a.dim();
  CentralSeries s = lower_central_series(a);
  Subspace derived(n);
  for (const auto& v : s.terms.size() > 1 ? s.terms[1] : s.terms[0]) derived.add(v);

  CharSequenceEstimate best;
  auto consider = [&](const Vec& x) {
    if (derived.contains(x)) return;
    CharSequence c = char_sequence_at(a, x, derived);
    ++best.evaluated;
    if (best.value.parts.empty() || c > best.value) {
      best.value = std::move(c);
      best.witness = x;
    }
  };
  for (std::size_t i = 1; i <= n; ++i) consider(Vec::basis(n, i));
  std::mt19937_64 rng(seed);
  for (std::size_t t = 0; t < budget; ++t) {
    Vec x(n);
    for (std::size_t k = 0; k < n; ++k) {
      long num = static_cast<long>(rng() % 7) - 3;
      long den = static_cast<long>(rng() % 3) + 1;
      x[k] = Rational(num, den);
    }
    consider(x);
  }
  return best;
}

std::vector<Vec> right_annihilator(const StructureTensor& a) {
  const std::size_t n = a.dim();
  // Row (i, k), column j: coefficient of e_k in [e_i, e_j].
  MatrixQ m(n * n, n);
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j)
      for (const auto& t : a.product(i, j)) m((i - 1) * n + (t.k - 1), j - 1) = t.c;
  return kernel(m);
}

std::size_t generator_chain_length(const StructureTensor& a, const Vec& x) {
  std::size_t len = 0;
  Vec cur = x;
  while (!cur.is_zero() && len <= a.dim()) {
    ++len;
    cur = bracket(a, cur, x);
  }
  return len;
}

int algebra_type(const StructureTensor& a) {
  const std::size_t n = a.dim();
  if (n < 4) return 0;
  const std::size_t len = generator_chain_length(a, Vec::basis(n, 1));
  if (len == n - 3) return 1;
  if (len == 3) return 2;
  return 0;
}

}  // namespace lnz
