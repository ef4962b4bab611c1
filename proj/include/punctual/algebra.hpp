#pragma once

#include "punctual/cyclotomic.hpp"
#include "punctual/series.hpp"
#include "punctual/subspace.hpp"

#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace punctual {

/// The local models A_{e,e',f}: Unramified (e = e' = 1), SmoothRam
/// (e > e' = 1), SingularRam (e = e' > 1) and the mixed case e > e' > 1,
/// which only supports element arithmetic.
enum class AlgebraKind { Unramified, SmoothRam, SingularRam, Mixed };

std::string_view to_string(AlgebraKind kind);
AlgebraKind parse_algebra_kind(std::string_view name);

struct AlgebraSpec {
  AlgebraKind kind = AlgebraKind::Unramified;
  int e = 1;
  int e_prime = 1;
  int f = 1;
  int N = 2;

  /// Derives the kind from (e, e') and validates.
  static AlgebraSpec make(int e, int e_prime, int f, int N);
  static AlgebraSpec unramified(int f, int N) { return make(1, 1, f, N); }
  static AlgebraSpec smooth_ram(int e, int f, int N) { return make(e, 1, f, N); }
  static AlgebraSpec singular_ram(int e, int f, int N) { return make(e, e, f, N); }

  /// Throws InvalidSpec when the fields are inconsistent.
  void validate() const;
  AlgebraSpec with_truncation(int trunc_order) const;
  AlgebraSpec with_f(int new_f) const;

  /// Size of the hereditary block, e/e'.
  int block() const { return e / e_prime; }
  /// Side length of the matrix presentation, f * e/e'.
  int matrix_size() const { return block() * f; }
  /// Order of the root of unity in the skew relations.
  int skew_order() const { return e_prime; }

  std::string describe() const;
  friend bool operator==(const AlgebraSpec& a, const AlgebraSpec& b) {
    return a.kind == b.kind && a.e == b.e && a.e_prime == b.e_prime && a.f == b.f && a.N == b.N;
  }
  friend bool operator!=(const AlgebraSpec& a, const AlgebraSpec& b) { return !(a == b); }
};

/// A_{e,e',f} / (u,v)^N A as a finite-dimensional algebra over Q(zeta_{e'}).
///
/// Elements are (n x n) matrices over S = R<x,y>/(x^{e'} = u, y^{e'} = v,
/// yx = zeta xy) (S = R when e' = 1, with x = u and y = v), where an entry
/// whose in-block row index exceeds its column index lies in xS. The
/// structural basis element with label (row, col, a, b, mono) is
///     E_{row,col} * x^delta * x^a y^b * u^i v^j,
/// delta = 1 exactly for those below-pattern positions and mono = u^i v^j with
/// i + j < N. Coordinates are ordered monomial-major, so elements of higher
/// total (u,v)-degree come later.
class Algebra {
public:
  struct Label {
    int row;
    int col;
    int xpow;
    int ypow;
    std::uint32_t mono;
  };

  enum class GeneratorType { Idempotent, Nilpotent };

  /// Shared, immutable instance per spec.
  static std::shared_ptr<const Algebra> make(const AlgebraSpec& spec);
  explicit Algebra(const AlgebraSpec& spec);

  const AlgebraSpec& spec() const noexcept { return spec_; }
  std::uint32_t dim() const noexcept { return dim_; }
  /// Number of structural basis elements per monomial (free R-rank).
  std::uint32_t rank() const noexcept { return rank_; }
  int matrix_size() const noexcept { return n_; }
  int skew_order() const noexcept { return s_; }

  const Label& label(std::uint32_t index) const { return labels_[index]; }
  std::uint32_t index(int row, int col, int xpow, int ypow, std::uint32_t mono) const;
  /// True when entry (row, col) carries the factor x.
  bool below_pattern(int row, int col) const {
    return (row % spec_.block()) > (col % spec_.block());
  }
  int degree(std::uint32_t index) const { return mono_degree_[labels_[index].mono]; }

  SparseVec multiply(const SparseVec& a, const SparseVec& b) const;
  /// Multiplication by the central monomial u^di v^dj.
  SparseVec shift(const SparseVec& a, int di, int dj) const;
  SparseVec one() const;
  /// s * 1 for a series s in the centre R_N.
  SparseVec central(const TruncSeries& s) const;
  /// The element x^a y^b placed on every diagonal position.
  SparseVec diagonal_skew(int xpow, int ypow) const;

  /// Algebra generators (together with 1), each idempotent or nilpotent.
  const std::vector<SparseVec>& generators() const noexcept { return generators_; }
  const std::vector<GeneratorType>& generator_types() const noexcept { return generator_types_; }
  /// Free R-basis of A (monomial part 1).
  const std::vector<SparseVec>& structural_basis() const noexcept { return structural_; }

  /// u * b* for SmoothRam (block diagonal when f > 1); 1 for Unramified,
  /// where the trace form identifies A* with A.
  SparseVec dual_generator() const;
  /// c^{-1} w c for the dual generator c. For SmoothRam this loses the top
  /// degree of precision, so it is exact modulo m^{N-1} A.
  SparseVec conjugate_by_dual(const SparseVec& w) const;

  const CycScalar& zeta_power(int k) const { return zeta_powers_[((k % s_) + s_) % s_]; }
  int field_order() const noexcept { return s_; }

private:
  AlgebraSpec spec_;
  int n_;
  int s_;
  std::uint32_t rank_;
  std::uint32_t dim_;
  std::vector<Label> labels_;
  std::vector<std::pair<int, int>> mono_exps_;
  std::vector<int> mono_degree_;
  std::vector<CycScalar> zeta_powers_;
  std::vector<SparseVec> generators_;
  std::vector<GeneratorType> generator_types_;
  std::vector<SparseVec> structural_;

  void build_generators();
};

/// Element of a truncated local algebra.
class AlgebraElement {
public:
  AlgebraElement(std::shared_ptr<const Algebra> algebra, SparseVec coords);

  static AlgebraElement zero(std::shared_ptr<const Algebra> algebra);
  static AlgebraElement one(std::shared_ptr<const Algebra> algebra);

  const Algebra& algebra() const noexcept { return *algebra_; }
  const std::shared_ptr<const Algebra>& algebra_ptr() const noexcept { return algebra_; }
  const AlgebraSpec& spec() const noexcept { return algebra_->spec(); }
  const SparseVec& coords() const noexcept { return coords_; }
  bool is_zero() const noexcept { return coords_.empty(); }

  AlgebraElement& operator+=(const AlgebraElement& o);
  AlgebraElement& operator-=(const AlgebraElement& o);
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);
  friend AlgebraElement operator*(const CycScalar& c, const AlgebraElement& a);
  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b);
  friend bool operator!=(const AlgebraElement& a, const AlgebraElement& b) { return !(a == b); }

private:
  std::shared_ptr<const Algebra> algebra_;
  SparseVec coords_;
};

/// a * b; both operands must share a spec (TruncMismatch otherwise).
AlgebraElement alg_mul(const AlgebraElement& a, const AlgebraElement& b);

/// b_{i,j} (1-based): E_{i,j} for i <= j and u E_{i,j} for i > j in the
/// in-block pattern. Defined for SmoothRam; i, j range over 1..e*f.
AlgebraElement standard_basis(const std::shared_ptr<const Algebra>& algebra, int i, int j);

/// c = u * b*, the dual shift element cleared of denominators (SmoothRam).
AlgebraElement dual_shift_element(const std::shared_ptr<const Algebra>& algebra);

/// Left-ideal generators of the two-sided maximal ideal m_i (1-based in-block
/// index; ignored when the block has size 1, e.g. n = (x, y) for SingularRam).
std::vector<AlgebraElement> maximal_ideal(const std::shared_ptr<const Algebra>& algebra, int i);

/// The element s * b_{i,j} for a series s (1-based indices).
AlgebraElement basis_times(const std::shared_ptr<const Algebra>& algebra, int i, int j,
                           const TruncSeries& s);

} // namespace punctual
