#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lnz/algebra.hpp"
#include "lnz/catalog.hpp"
#include "lnz/matrix.hpp"

namespace lnz {

/// Columns are the new basis vectors in old coordinates.
struct BasisChange {
  MatrixQ matrix;
};

/// [e'_i, e'_j] expressed in the e' basis. Throws SingularChange and
/// DimensionMismatch.
StructureTensor apply_change(const StructureTensor& a, const BasisChange& p);

/// e'_1 = A1 e1 + A4 e4, e'_4 = B4 e4. For epsilon = 1 the second generator
/// is forced to (A1 - A4) e4 and b4 is ignored.
struct GradedChange2 {
  Rational a1 = 1, a4 = 0, b4 = 1;
  friend bool operator==(const GradedChange2&, const GradedChange2&) = default;
};

/// e'_1 = A1 e1 + A e_{n-2}, e'_{n-2} = B e_{n-2}.
struct FirstTypeChange {
  Rational a1 = 1, a = 0, b = 1;
};

using BranchSlots = std::array<Rational, 3>;

/// The completed basis: the generators as above, then e'_2 = [e'_1,e'_1],
/// e'_3 = [e'_2,e'_1] and e'_{k+1} = [e'_k,e'_1] from e'_4 (second type), or
/// the chain e'_2..e'_{n-3} from e'_1 followed by e'_{n-1}, e'_n from
/// e'_{n-2} (first type).
BasisChange completed_basis(const StructureTensor& a, const GradedChange2& g, int epsilon);
BasisChange completed_basis(const StructureTensor& a, const FirstTypeChange& g);

/// Reads the parameters off a tensor and confirms that the whole table has
/// catalog form. Throws NotInCatalogForm.
SecondTypeParams extract_second_type(const StructureTensor& a, int epsilon);
BranchSlots extract_first_type(const StructureTensor& a, FirstTypeBranch branch);

/// Closed-form parameter maps. Throw RestrictionViolated naming the vanishing
/// factor, and EpsilonMismatch when the case does not fit p.
SecondTypeParams param_map_case1(const SecondTypeParams& p, const GradedChange2& g);
SecondTypeParams param_map_case2(const SecondTypeParams& p, const GradedChange2& g);
SecondTypeParams param_map(const SecondTypeParams& p, const GradedChange2& g);
BranchSlots param_map_type1_a(const BranchSlots& p, const FirstTypeChange& g);
BranchSlots param_map_type1_b(const BranchSlots& p, const FirstTypeChange& g);

/// Zero/nonzero pattern of the printed nullity invariants, by name.
struct NullitySignature {
  std::vector<std::pair<std::string, bool>> zero;
  friend bool operator==(const NullitySignature&, const NullitySignature&) = default;
  std::string str() const;
};

NullitySignature nullity_signature(const SecondTypeParams& p);
/// Branch A: alpha1 - beta2, plus 1 - alpha2 when alpha1 = 0 and 1 + alpha2
/// when beta2 = 0. Branch B: 1 + a2 and alpha1 + b2.
NullitySignature nullity_signature(const BranchSlots& p, FirstTypeBranch branch);

struct EquivalenceResult {
  enum class Verdict { Equivalent, Distinct, Unknown };
  Verdict verdict = Verdict::Unknown;
  std::optional<GradedChange2> witness;
  std::string invariant;  // Distinct
  std::string stage;      // Equivalent: which search stage found the witness
};

const char* to_string(EquivalenceResult::Verdict v) noexcept;

/// Three-valued: Equivalent comes with a witness g satisfying
/// param_map(p, g) = q, Distinct names a differing invariant, Unknown when no
/// rational witness of height <= budget (or from the elimination) exists.
/// Throws EpsilonMismatch.
EquivalenceResult decide_equivalence(const SecondTypeParams& p, const SecondTypeParams& q, unsigned budget);

/// param_map_case1 is unchanged under (A1, A4, B4) -> (cA1, cA4, cB4) for
/// `trials` random inputs.
bool verify_homogeneity(std::size_t trials = 100, std::uint64_t seed = 1);

}  // namespace lnz
