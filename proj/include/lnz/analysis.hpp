#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lnz/algebra.hpp"
#include "lnz/matrix.hpp"

namespace lnz {

/// terms[0] = L, terms[k] = [terms[k-1], L], each as a reduced echelon basis.
/// A nilpotent series ends with the zero subspace; otherwise it stops at the
/// first repeated term (which is not duplicated) and nilpotent is false.
struct CentralSeries {
  std::vector<std::vector<Vec>> terms;
  bool nilpotent = false;

  std::vector<std::size_t> dims() const;
};

CentralSeries lower_central_series(const StructureTensor& a);

/// Smallest s with L^s = 0. Throws NonNilpotent.
std::size_t nilindex(const StructureTensor& a);

/// pieces[i-1] is a section basis of L^i / L^{i+1}. induced is gr L in the
/// concatenation of the sections.
struct GradedDecomposition {
  std::vector<std::vector<Vec>> pieces;
  std::vector<std::size_t> dims;
  StructureTensor induced;
};

/// Sections by echelon completion: each basis vector of L^i is reduced
/// against the echelon form of L^{i+1} (growing as vectors are accepted); the
/// nonzero reduced vectors form the section. Throws NonNilpotent.
GradedDecomposition natural_gradation(const StructureTensor& a);

/// True iff every product of a piece-i and a piece-j section vector lies in
/// L^{i+j}.
bool grading_law_holds(const StructureTensor& a, const GradedDecomposition& g);

struct CharSequence {
  std::vector<std::size_t> parts;

  std::string str() const;
  friend bool operator==(const CharSequence&, const CharSequence&) = default;
  friend std::strong_ordering operator<=>(const CharSequence& a, const CharSequence& b) {
    return std::lexicographical_compare_three_way(a.parts.begin(), a.parts.end(), b.parts.begin(), b.parts.end());
  }
};

/// Jordan block sizes of R_x. Throws ElementInDerivedSubalgebra when x lies in
/// L^2 and NotNilpotent when R_x is not nilpotent.
CharSequence char_sequence_at(const StructureTensor& a, const Vec& x);
/// Same, against a precomputed echelon basis of L^2.
CharSequence char_sequence_at(const StructureTensor& a, const Vec& x, const Subspace& derived);

/// Lexicographic maximum over basis vectors outside L^2 and `budget`
/// pseudo-random vectors (entries p/q with |p| <= 3, 1 <= q <= 3) drawn from
/// a std::mt19937_64 seeded with `seed`. A lower bound for C(L).
struct CharSequenceEstimate {
  CharSequence value;
  Vec witness;
  std::size_t evaluated = 0;
};
CharSequenceEstimate char_sequence_estimate(const StructureTensor& a, std::size_t budget, std::uint64_t seed);

/// {x : [y, x] = 0 for all y}, reduced echelon basis.
std::vector<Vec> right_annihilator(const StructureTensor& a);

/// Number of nonzero vectors in x, [x,x], [[x,x],x], ...
std::size_t generator_chain_length(const StructureTensor& a, const Vec& x);

/// 1 when e_1 heads a chain of length n-3 under R_{e_1}, 2 when it heads the
/// chain of length 3, 0 otherwise.
int algebra_type(const StructureTensor& a);

}  // namespace lnz
