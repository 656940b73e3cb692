#pragma once

#include <string>
#include <string_view>

#include "lnz/algebra.hpp"
#include "lnz/matrix.hpp"

namespace lnz {

/// Canonical algebra document: keys sorted, entries sorted by (i, j), terms
/// by k, reduced fractions, one table entry per line. Identical tensors give
/// identical bytes.
std::string serialize_algebra(const StructureTensor& a);

/// Throws SyntaxError (with line/column for JSON-level faults), IndexError or
/// DuplicateEntry.
StructureTensor parse_algebra(std::string_view text);

/// Basis-change document {"dim": n, "matrix": [[...], ...]}; the columns are
/// the new basis vectors in old coordinates.
std::string serialize_change(const MatrixQ& m);
MatrixQ parse_change(std::string_view text);

}  // namespace lnz
