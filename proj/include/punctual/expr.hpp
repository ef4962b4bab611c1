#pragma once

#include "punctual/algebra.hpp"
#include "punctual/series.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace punctual {

/// Matrix of entry strings, row-major.
using EntryGrid = std::vector<std::vector<std::string>>;

/// Element of Q(zeta_order) written with numbers, z, + - * / ^ and
/// parentheses. ParseError on anything else.
CycScalar parse_scalar(std::string_view text, int order = 1);

/// Polynomial in u, v over the rationals, truncated at N.
TruncSeries parse_series(std::string_view text, int N);

/// One matrix entry of an element of `algebra`. The text is read in the skew
/// ring (x^s = u, y^s = v, yx = z xy, with x = u, y = v when s = 1). Entries
/// below the in-block diagonal must be left multiples of x (PatternViolation
/// otherwise).
SparseVec parse_entry(const Algebra& algebra, int row, int col, std::string_view text);

/// Full element from an n x n grid of entry strings.
SparseVec parse_element(const Algebra& algebra, const EntryGrid& entries);

/// text * identity.
SparseVec parse_central(const Algebra& algebra, std::string_view text);

/// Inverse of parse_element: actual entries (including the x factor below
/// the diagonal) in normal order x^a y^b u^i v^j, "0" for empty entries.
EntryGrid render_element(const Algebra& algebra, const SparseVec& v);

} // namespace punctual
