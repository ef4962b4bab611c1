#pragma once

#include "punctual/cyclotomic.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace punctual {

struct Term {
  std::uint32_t index;
  CycScalar value;

  friend bool operator==(const Term& a, const Term& b) {
    return a.index == b.index && a.value == b.value;
  }
};

/// Sparse coordinate vector: terms strictly increasing by index, no zeros.
using SparseVec = std::vector<Term>;

/// x + a*y
SparseVec axpy(const SparseVec& x, const CycScalar& a, const SparseVec& y);
void scale(SparseVec& x, const CycScalar& a);
/// Sorts and merges duplicate indices, dropping zeros.
SparseVec normalize_terms(std::vector<Term> terms);
SparseVec unit_vector(std::uint32_t index);
const CycScalar* find_coeff(const SparseVec& v, std::uint32_t index);

/// Subspace of a finite coordinate space, held in reduced row-echelon form.
///
/// The pivot of a row is its smallest index; every row is scaled so the pivot
/// coefficient is 1 and every other row vanishes at that index. This form is
/// unique for a given subspace, so equality of subspaces is equality of rows.
class Subspace {
public:
  explicit Subspace(std::size_t ambient = 0) : ambient_(ambient), is_pivot_(ambient, false) {}

  static Subspace span(std::size_t ambient, const std::vector<SparseVec>& vectors);

  std::size_t ambient_dim() const noexcept { return ambient_; }
  std::size_t dim() const noexcept { return rows_.size(); }
  std::size_t codim() const noexcept { return ambient_ - rows_.size(); }
  bool is_pivot(std::uint32_t index) const { return is_pivot_[index]; }

  /// Rows keyed by pivot, in increasing pivot order.
  const std::map<std::uint32_t, SparseVec>& rows() const noexcept { return rows_; }
  std::vector<SparseVec> basis() const;

  /// Remainder of `v` after eliminating every pivot coordinate.
  SparseVec reduce(const SparseVec& v) const;
  bool contains(const SparseVec& v) const { return reduce(v).empty(); }
  bool contains(const Subspace& other) const;

  /// Adds `v`; returns false when it was already in the span. When `reduced`
  /// is given it receives the normalized remainder that was added, which
  /// together with the previous rows still spans the new subspace.
  bool insert(const SparseVec& v, SparseVec* reduced = nullptr);

  friend bool operator==(const Subspace& a, const Subspace& b);
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

private:
  std::size_t ambient_;
  std::vector<bool> is_pivot_;
  std::map<std::uint32_t, SparseVec> rows_;
};

Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersection(const Subspace& a, const Subspace& b);

/// Reduced-echelon vectors spanning a complement of `inner` inside `outer`
/// (i.e. a basis of outer/inner), each reduced modulo `inner`, in increasing
/// pivot order.
std::vector<SparseVec> quotient_basis(const Subspace& outer, const Subspace& inner);

/// Kernel of the linear map sending the i-th domain coordinate to images[i].
std::vector<SparseVec> kernel(const std::vector<SparseVec>& images, std::size_t codomain_dim);

} // namespace punctual
