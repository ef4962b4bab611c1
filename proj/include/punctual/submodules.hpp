#pragma once

#include "punctual/algebra.hpp"
#include "punctual/series.hpp"
#include "punctual/subspace.hpp"

#include <memory>
#include <optional>
#include <vector>

namespace punctual {

/// Left ideal of a truncated algebra, held as a canonical subspace.
///
/// Saturation means the ideal contains every basis element of (u,v)-degree
/// N-1, i.e. all of m^{N-1} A. Its preimage in the untruncated algebra is then
/// a genuine left ideal of finite colength, and every containment question
/// asked below is answered exactly by the truncated computation.
class LeftIdeal {
public:
  /// Throws NotAnIdeal (with the offending product) when `basis` is not
  /// closed under left multiplication by the algebra generators.
  LeftIdeal(std::shared_ptr<const Algebra> algebra, Subspace basis);

  /// Skips the closure check; only for subspaces built by a closure routine.
  static LeftIdeal assume_closed(std::shared_ptr<const Algebra> algebra, Subspace basis);
  static LeftIdeal whole(std::shared_ptr<const Algebra> algebra);

  const Algebra& algebra() const noexcept { return *algebra_; }
  const std::shared_ptr<const Algebra>& algebra_ptr() const noexcept { return algebra_; }
  const AlgebraSpec& spec() const noexcept { return algebra_->spec(); }
  const Subspace& basis() const noexcept { return basis_; }

  bool saturated() const noexcept { return saturated_; }
  /// dim A_N / I; NotSaturated unless saturated().
  int colength() const;
  int quotient_dim() const { return static_cast<int>(basis_.codim()); }
  bool is_whole() const { return basis_.codim() == 0; }

  bool contains(const SparseVec& v) const { return basis_.contains(v); }
  bool contains(const AlgebraElement& a) const { return basis_.contains(a.coords()); }
  bool contains(const LeftIdeal& other) const { return basis_.contains(other.basis_); }

  friend bool operator==(const LeftIdeal& a, const LeftIdeal& b) {
    return a.spec() == b.spec() && a.basis_ == b.basis_;
  }
  friend bool operator!=(const LeftIdeal& a, const LeftIdeal& b) { return !(a == b); }

private:
  struct Trusted {};
  LeftIdeal(std::shared_ptr<const Algebra> algebra, Subspace basis, Trusted);

  std::shared_ptr<const Algebra> algebra_;
  Subspace basis_;
  bool saturated_;
};

/// Which operations a closure must be stable under.
struct ClosureSides {
  bool left = true;
  bool right = false;
  /// Conjugation by the dual generator (see Algebra::conjugate_by_dual).
  bool dual_conjugation = false;
};

/// Smallest subspace containing `seed` and stable under the requested
/// operations, applied through the algebra generators.
Subspace close_subspace(const Algebra& algebra, const std::vector<SparseVec>& seed,
                        ClosureSides sides);

/// Left ideal generated by `gens`.
LeftIdeal close_left_ideal(const std::shared_ptr<const Algebra>& algebra,
                           const std::vector<SparseVec>& gens);
LeftIdeal close_left_ideal(const std::vector<AlgebraElement>& gens);

/// Outcome of a containment test. On failure `witness` is an element that
/// escapes the target subspace.
struct ContainmentCheck {
  bool holds = true;
  std::optional<SparseVec> witness;
  explicit operator bool() const noexcept { return holds; }
};

/// I * g inside I for every algebra generator g.
ContainmentCheck two_sided_check(const LeftIdeal& ideal);
bool is_two_sided(const LeftIdeal& ideal);

/// I A* inside A* I. With c the dual generator this reads I c A inside c I,
/// and since c normalizes A it is equivalent to sigma(I) A inside I for
/// sigma(a) = c^{-1} a c. The witness is an element of sigma(I) A outside I.
ContainmentCheck dual_containment_check(const LeftIdeal& ideal);
bool check_dual_containment(const LeftIdeal& ideal);

/// Submodule of R_N^f, coordinates ordered component-major.
struct RowModule {
  int f = 1;
  int N = 2;
  Subspace basis;

  static RowModule direct_sum(const std::vector<CommIdeal>& summands);
  /// Splits M as a direct sum of ideals when it is one.
  std::optional<std::vector<CommIdeal>> summands() const;
  bool saturated() const;
  /// dim R_N^f / M; NotSaturated unless saturated().
  int colength() const;

  friend bool operator==(const RowModule& a, const RowModule& b) {
    return a.f == b.f && a.N == b.N && a.basis == b.basis;
  }
};

/// I = {X in M_f(R_N) : every row of X lies in M}. Unramified only.
LeftIdeal morita_lift(const std::shared_ptr<const Algebra>& algebra, const RowModule& module);
LeftIdeal morita_lift(const std::shared_ptr<const Algebra>& algebra,
                      const std::vector<CommIdeal>& summands);
/// The first-row module E_{1,1} I. Unramified only.
RowModule morita_drop(const LeftIdeal& ideal);

/// E I E for the first diagonal block unit E of M_f(B), as an ideal of B.
LeftIdeal block_corner(const LeftIdeal& ideal);
/// M_f(J) for an ideal J of B (f = 1 spec) inside `target` = M_f(B).
LeftIdeal block_lift(const LeftIdeal& corner, const std::shared_ptr<const Algebra>& target);

/// {s in R_N : s * b_{row,col} in I} for 0-based matrix positions (e' = 1).
CommIdeal position_ideal(const LeftIdeal& ideal, int row, int col);

/// All left ideals of colength one. DimensionBound when the truncated algebra
/// exceeds `max_dim`.
std::vector<LeftIdeal> find_codim_one_quotients(const AlgebraSpec& spec, std::size_t max_dim = 5000);

/// The same ideal at another truncation order. Raising takes the preimage
/// (NotSaturated unless saturated); lowering takes the image.
LeftIdeal retruncate(const LeftIdeal& ideal, int N);
CommIdeal retruncate(const CommIdeal& ideal, int N);

} // namespace punctual
