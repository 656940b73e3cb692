#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "lnz/algebra.hpp"
#include "lnz/rational.hpp"

namespace lnz {

struct SecondTypeParams {
  int epsilon = 0;
  Rational alpha1, alpha2, alpha3, alpha4;
  Rational beta = -1;
  std::string label;  // "0.3", "1.27", ...; metadata only

  std::vector<Rational> alphas() const { return {alpha1, alpha2, alpha3, alpha4}; }
  friend bool operator==(const SecondTypeParams& a, const SecondTypeParams& b) {
    return a.epsilon == b.epsilon && a.alphas() == b.alphas() && a.beta == b.beta;
  }
};

/// The three subscript slots of families 34..41. Families 34-37 read them as
/// (alpha1, alpha2, beta2) of the e_{n-1} in R(L) branch, 38-41 as
/// (alpha1, b2, a2) of the e_{n-1} not in R(L) branch.
struct FirstTypeParams {
  int family = 34;
  Rational p1, p2, p3;

  std::vector<Rational> slots() const { return {p1, p2, p3}; }
  friend bool operator==(const FirstTypeParams& a, const FirstTypeParams& b) {
    return a.family == b.family && a.slots() == b.slots();
  }
};

enum class FirstTypeBranch { A, B };
FirstTypeBranch branch_of(int family);

/// Admissible values of one free parameter: a finite set, or every rational
/// outside `values`.
struct ParamDomain {
  std::string symbol;
  bool finite = false;
  std::vector<Rational> values;

  bool contains(const Rational& v) const;
  std::string describe() const;  // "μ ∈ ℂ∖{0}", "λ ∈ {0,1}", "λ ∈ ℂ"
};

/// One tuple slot as a function of the row's free parameters.
struct Slot {
  enum class Kind { Const, Scaled, QuarterSquare, Reciprocal };
  Kind kind = Kind::Const;
  Rational c;         // constant, scale, or numerator
  std::size_t var = 0;

  Rational eval(const std::vector<Rational>& free) const;
  std::string str(const std::vector<ParamDomain>& domains) const;
};

struct CatalogRow {
  int type = 2;
  std::string label;
  int epsilon = 0;       // second type
  Rational beta = -1;    // second type
  int family = 0;        // first type
  bool even_only = false;
  std::vector<ParamDomain> domains;
  std::vector<Slot> slots;  // four alphas or three family slots

  std::vector<Rational> tuple(const std::vector<Rational>& free) const;
  std::string display_name(const std::vector<Rational>& free) const;
};

/// All rows in canonical order: second type as tabulated, then 34..41.
const std::vector<CatalogRow>& catalog_rows();

struct Violation {
  std::string what;
};

/// Membership, exclusions and (when n is given) parity.
std::optional<Violation> validate_params(const CatalogRow& row, const std::vector<Rational>& free,
                                         std::optional<std::size_t> n = std::nullopt);

struct RowMatch {
  const CatalogRow* row = nullptr;
  std::vector<Rational> free;
};

/// Row whose tuple equals the given one with admissible free values; when
/// `label` is nonempty only rows with that label are considered.
std::optional<RowMatch> match_second_type(const SecondTypeParams& p);
std::optional<RowMatch> match_first_type(const FirstTypeParams& p);

/// Throws DimensionTooSmall (n < 9), ParityViolation (epsilon = 1, n odd),
/// InadmissibleParams (bad epsilon/beta, or in strict mode no matching row).
StructureTensor build_second_type(std::size_t n, const SecondTypeParams& p, bool strict = true);

/// Throws UnknownFamily, DimensionTooSmall, InadmissibleParams.
StructureTensor build_first_type(std::size_t n, const FirstTypeParams& p);

/// The unrestricted branch table with slots taken as-is.
StructureTensor build_first_type_branch(std::size_t n, FirstTypeBranch branch, const Rational& p1, const Rational& p2,
                                        const Rational& p3);

using FamilyParams = std::variant<SecondTypeParams, FirstTypeParams>;

struct CatalogInstance {
  const CatalogRow* row = nullptr;
  std::size_t n = 0;
  std::vector<Rational> free;
  FamilyParams params;
  StructureTensor tensor;
};

/// Every row at every compatible n >= 9 (row order, then n, then samples,
/// first free parameter outermost). Finite domains are enumerated fully,
/// open ones sampled over `samples` minus exclusions.
std::vector<CatalogInstance> enumerate_catalog(const std::vector<std::size_t>& dims,
                                               const std::vector<Rational>& samples);

/// Machine-readable list of every row with its slots and constraints.
std::string serialize_catalog_index();

}  // namespace lnz
