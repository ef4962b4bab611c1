#pragma once

#include "punctual/cyclotomic.hpp"
#include "punctual/subspace.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace punctual {

// Monomials u^i v^j are indexed degree-major; inside one degree the order is
// lexicographic with u < v, so u^d comes first and v^d last.
constexpr std::uint32_t monomial_index(int i, int j) {
  const int d = i + j;
  return static_cast<std::uint32_t>(d * (d + 1) / 2 + j);
}
constexpr std::uint32_t monomial_count(int trunc_order) {
  return static_cast<std::uint32_t>(trunc_order * (trunc_order + 1) / 2);
}
std::pair<int, int> monomial_exponents(std::uint32_t index);
int monomial_degree(std::uint32_t index);

/// Multiplies a coefficient vector over the monomial basis by u^di v^dj,
/// dropping everything of total degree >= trunc_order.
SparseVec shift_monomials(const SparseVec& v, int di, int dj, int trunc_order);

/// "u^2*v" style rendering; the empty monomial renders as "1".
std::string monomial_string(int i, int j);

/// Sum of terms "c*mono" joined by " + " / " - " in index order; unit
/// coefficients are elided and irrational ones parenthesized. "0" when empty.
std::string render_terms(const SparseVec& v, const std::function<std::string(std::uint32_t)>& monomial);

/// Element of Q(zeta)[u,v] / (u,v)^N.
class TruncSeries {
public:
  explicit TruncSeries(int trunc_order);
  TruncSeries(int trunc_order, SparseVec coeffs);

  static TruncSeries monomial(int trunc_order, int i, int j, CycScalar c = CycScalar(1));
  static TruncSeries constant(int trunc_order, CycScalar c);

  int trunc_order() const noexcept { return trunc_order_; }
  const SparseVec& coeffs() const noexcept { return coeffs_; }
  CycScalar coefficient(int i, int j) const;
  bool is_zero() const noexcept { return coeffs_.empty(); }

  TruncSeries& operator+=(const TruncSeries& o);
  TruncSeries& operator-=(const TruncSeries& o);
  TruncSeries operator-() const;
  friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
  friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }
  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);
  friend TruncSeries operator*(const CycScalar& c, const TruncSeries& a);
  friend bool operator==(const TruncSeries& a, const TruncSeries& b) {
    return a.trunc_order_ == b.trunc_order_ && a.coeffs_ == b.coeffs_;
  }

  std::string to_string() const;

private:
  int trunc_order_;
  SparseVec coeffs_;
};

/// Ideal of R_N held as a canonical subspace over the monomial basis.
///
/// `saturated()` certifies that the ideal contains every monomial of degree
/// N-1; only then is the truncated ideal the faithful image of an ideal of
/// finite colength in the power series ring.
class CommIdeal {
public:
  /// Throws NotContained if `basis` is not closed under u and v.
  CommIdeal(int trunc_order, Subspace basis);

  static CommIdeal unit(int trunc_order);
  static CommIdeal maximal(int trunc_order);
  static CommIdeal maximal_power(int trunc_order, int k);

  int trunc_order() const noexcept { return trunc_order_; }
  const Subspace& basis() const noexcept { return basis_; }
  bool saturated() const noexcept { return saturated_; }
  bool is_unit() const { return basis_.dim() == basis_.ambient_dim(); }

  /// dim R_N / J; rejects unsaturated ideals.
  int colength() const;
  /// dim R_N / J with no saturation requirement.
  int quotient_dim() const { return static_cast<int>(basis_.codim()); }

  bool contains(const CommIdeal& other) const { return basis_.contains(other.basis_); }
  bool contains(const TruncSeries& s) const { return basis_.contains(s.coeffs()); }
  std::vector<TruncSeries> basis_series() const;

  friend bool operator==(const CommIdeal& a, const CommIdeal& b) {
    return a.trunc_order_ == b.trunc_order_ && a.basis_ == b.basis_;
  }
  friend bool operator!=(const CommIdeal& a, const CommIdeal& b) { return !(a == b); }

private:
  int trunc_order_;
  Subspace basis_;
  bool saturated_;
};

CommIdeal ideal_from_generators(const std::vector<TruncSeries>& gens, int trunc_order);
int colength(const CommIdeal& ideal);

CommIdeal ideal_sum(const CommIdeal& a, const CommIdeal& b);
CommIdeal ideal_intersection(const CommIdeal& a, const CommIdeal& b);
/// (u, v) * J
CommIdeal maximal_times(const CommIdeal& ideal);
/// s * J, e.g. the u*J_1 appearing in chain conditions.
CommIdeal ideal_times(const TruncSeries& s, const CommIdeal& ideal);

/// Monomial ideal whose standard monomials are the first `colength`
/// monomials in graded order (the lexicographically smallest staircase).
CommIdeal staircase_ideal(int colength, int trunc_order);

struct IdealPair {
  CommIdeal smaller;
  CommIdeal larger;
};

/// Given inner strictly inside outer: `smaller` has outer/smaller simple and
/// contains m*outer + inner; `larger` = inner + one socle vector of outer/inner.
IdealPair socle_and_cosocle_picks(const CommIdeal& inner, const CommIdeal& outer);

/// J' inside J with J/J' simple (contains m*J).
CommIdeal nakayama_corank1_pick(const CommIdeal& ideal);

/// J' containing J with J'/J simple; J must be proper.
CommIdeal socle_pick(const CommIdeal& ideal);

} // namespace punctual
