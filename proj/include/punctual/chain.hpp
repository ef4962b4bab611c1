#pragma once

#include "punctual/submodules.hpp"

#include <vector>

namespace punctual {

/// Chain R >= J_1 >= ... >= J_e >= u J_1 of ideals of R_N.
struct IdealChain {
  std::vector<CommIdeal> entries;

  int length() const { return static_cast<int>(entries.size()); }
  int trunc_order() const { return entries.front().trunc_order(); }
  /// 1-based access, J_i.
  const CommIdeal& at(int i) const { return entries.at(i - 1); }
  /// ChainInvariantViolated when an inclusion fails.
  void validate() const;
  bool all_equal() const;
  /// Sum of colength(J_k).
  int colength_sum() const;

  friend bool operator==(const IdealChain& a, const IdealChain& b) { return a.entries == b.entries; }
};

/// 1-based chain index of the coordinate ideal at 0-based position (i, j) of
/// the circulant shape: J_{e-(j-i)} on and above the diagonal, u J_{i-j} below.
int circulant_index(int e, int i, int j);

/// The circulant ideal of B (or M_f(B) when the algebra has f > 1).
LeftIdeal chain_compose(const IdealChain& chain, const std::shared_ptr<const Algebra>& algebra);

/// Inverse of chain_compose for ideals with I A* inside A* I. Reports
/// NotCirculant, naming the offending positions, when the ideal is not of
/// that shape.
IdealChain chain_decompose(const LeftIdeal& ideal);

/// True when the ideal equals the circulant ideal built from the
/// coordinate ideals of its last column. No two-sidedness is assumed.
bool has_chain_shape(const LeftIdeal& ideal);

/// Matrix subspace with coordinate ideal grid[i][j] at position (i, j) of B
/// (f = 1, e' = 1). No closure check.
Subspace grid_subspace(const Algebra& algebra, const std::vector<std::vector<CommIdeal>>& grid);

} // namespace punctual
