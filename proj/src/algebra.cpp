#include "punctual/algebra.hpp"

#include "punctual/error.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <tuple>

namespace punctual {

std::string_view to_string(AlgebraKind kind) {
  switch (kind) {
  case AlgebraKind::Unramified: return "Unramified";
  case AlgebraKind::SmoothRam: return "SmoothRam";
  case AlgebraKind::SingularRam: return "SingularRam";
  case AlgebraKind::Mixed: return "Mixed";
  }
  return "?";
}

AlgebraKind parse_algebra_kind(std::string_view name) {
  for (auto k : {AlgebraKind::Unramified, AlgebraKind::SmoothRam, AlgebraKind::SingularRam,
                 AlgebraKind::Mixed})
    if (to_string(k) == name) return k;
  throw Error(ErrorCode::InvalidSpec, "unknown algebra kind", std::string(name));
}

namespace {

AlgebraKind kind_for(int e, int e_prime) {
  if (e == 1) return AlgebraKind::Unramified;
  if (e_prime == 1) return AlgebraKind::SmoothRam;
  if (e_prime == e) return AlgebraKind::SingularRam;
  return AlgebraKind::Mixed;
}

} // namespace

AlgebraSpec AlgebraSpec::make(int e, int e_prime, int f, int N) {
  AlgebraSpec s;
  s.e = e;
  s.e_prime = e_prime;
  s.f = f;
  s.N = N;
  if (e >= 1 && e_prime >= 1) s.kind = kind_for(e, e_prime);
  s.validate();
  return s;
}

void AlgebraSpec::validate() const {
  if (e < 1 || e_prime < 1 || f < 1)
    throw Error(ErrorCode::InvalidSpec, "e, e' and f must be positive", describe());
  if (e % e_prime != 0) throw Error(ErrorCode::InvalidSpec, "e' must divide e", describe());
  if (N < 2) throw Error(ErrorCode::InvalidSpec, "truncation order must be at least 2", describe());
  if (kind != kind_for(e, e_prime))
    throw Error(ErrorCode::InvalidSpec, "kind does not match (e, e')", describe());
}

AlgebraSpec AlgebraSpec::with_truncation(int trunc_order) const {
  return make(e, e_prime, f, trunc_order);
}

AlgebraSpec AlgebraSpec::with_f(int new_f) const { return make(e, e_prime, new_f, N); }

std::string AlgebraSpec::describe() const {
  std::ostringstream os;
  os << to_string(kind) << "(e=" << e << ", e'=" << e_prime << ", f=" << f << ", N=" << N << ")";
  return os.str();
}

std::shared_ptr<const Algebra> Algebra::make(const AlgebraSpec& spec) {
  static std::mutex mu;
  static std::map<std::tuple<int, int, int, int>, std::shared_ptr<const Algebra>> cache;
  spec.validate();
  const auto key = std::make_tuple(spec.e, spec.e_prime, spec.f, spec.N);
  std::lock_guard lock(mu);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  auto alg = std::make_shared<const Algebra>(spec);
  cache.emplace(key, alg);
  return alg;
}

Algebra::Algebra(const AlgebraSpec& spec)
    : spec_(spec), n_(spec.matrix_size()), s_(spec.skew_order()) {
  spec_.validate();
  rank_ = static_cast<std::uint32_t>(n_ * n_ * s_ * s_);
  const std::uint32_t monos = monomial_count(spec_.N);
  dim_ = rank_ * monos;
  mono_exps_.reserve(monos);
  mono_degree_.reserve(monos);
  for (std::uint32_t m = 0; m < monos; ++m) {
    mono_exps_.push_back(monomial_exponents(m));
    mono_degree_.push_back(monomial_degree(m));
  }
  labels_.reserve(dim_);
  for (std::uint32_t m = 0; m < monos; ++m)
    for (int r = 0; r < n_; ++r)
      for (int c = 0; c < n_; ++c)
        for (int a = 0; a < s_; ++a)
          for (int b = 0; b < s_; ++b) labels_.push_back({r, c, a, b, m});
  for (int k = 0; k < s_; ++k) zeta_powers_.push_back(CycScalar::zeta(s_, k));
  for (std::uint32_t i = 0; i < rank_; ++i) structural_.push_back(unit_vector(i));
  build_generators();
}

std::uint32_t Algebra::index(int row, int col, int xpow, int ypow, std::uint32_t mono) const {
  if (row < 0 || row >= n_ || col < 0 || col >= n_ || xpow < 0 || xpow >= s_ || ypow < 0 ||
      ypow >= s_ || mono >= monomial_count(spec_.N))
    throw Error(ErrorCode::OutOfRange, "basis label out of range");
  return mono * rank_ +
         static_cast<std::uint32_t>(((row * n_ + col) * s_ + xpow) * s_ + ypow);
}

SparseVec Algebra::multiply(const SparseVec& a, const SparseVec& b) const {
  if (a.empty() || b.empty()) return {};
  std::vector<std::vector<const Term*>> by_row(n_);
  for (const auto& t : b) by_row[labels_[t.index].row].push_back(&t);
  std::vector<Term> out;
  const int N = spec_.N;
  for (const auto& ta : a) {
    const Label& la = labels_[ta.index];
    const auto& bucket = by_row[la.col];
    if (bucket.empty()) continue;
    const int delta1 = below_pattern(la.row, la.col) ? 1 : 0;
    const auto [ia, ja] = mono_exps_[la.mono];
    for (const Term* tb : bucket) {
      const Label& lb = labels_[tb->index];
      const int delta2 = below_pattern(lb.row, lb.col) ? 1 : 0;
      const int delta3 = below_pattern(la.row, lb.col) ? 1 : 0;
      const int xa = delta1 + la.xpow;
      const int xb = delta2 + lb.xpow;
      // y^b1 x^xb = zeta^(b1*xb) x^xb y^b1
      const int x_total = xa + xb - delta3;
      const int y_total = la.ypow + lb.ypow;
      const auto [ib, jb] = mono_exps_[lb.mono];
      const int ui = ia + ib + x_total / s_;
      const int vj = ja + jb + y_total / s_;
      if (ui + vj >= N) continue;
      CycScalar coeff = ta.value * tb->value;
      if (s_ > 1 && la.ypow != 0 && xb != 0) coeff = coeff * zeta_power(la.ypow * xb);
      out.push_back({index(la.row, lb.col, x_total % s_, y_total % s_, monomial_index(ui, vj)),
                     std::move(coeff)});
    }
  }
  return normalize_terms(std::move(out));
}

SparseVec Algebra::shift(const SparseVec& a, int di, int dj) const {
  SparseVec out;
  out.reserve(a.size());
  for (const auto& t : a) {
    const Label& l = labels_[t.index];
    const auto [i, j] = mono_exps_[l.mono];
    if (i + di + j + dj >= spec_.N) continue;
    out.push_back({index(l.row, l.col, l.xpow, l.ypow, monomial_index(i + di, j + dj)), t.value});
  }
  return out;
}

SparseVec Algebra::one() const {
  SparseVec out;
  for (int r = 0; r < n_; ++r) out.push_back({index(r, r, 0, 0, 0), CycScalar(1)});
  return out;
}

SparseVec Algebra::central(const TruncSeries& s) const {
  if (s.trunc_order() != spec_.N)
    throw Error(ErrorCode::TruncMismatch, "series truncation differs from algebra truncation");
  std::vector<Term> out;
  for (const auto& t : s.coeffs())
    for (int r = 0; r < n_; ++r) out.push_back({index(r, r, 0, 0, t.index), t.value});
  return normalize_terms(std::move(out));
}

SparseVec Algebra::diagonal_skew(int xpow, int ypow) const {
  const int ui = xpow / s_;
  const int vj = ypow / s_;
  if (ui + vj >= spec_.N) return {};
  SparseVec out;
  for (int r = 0; r < n_; ++r)
    out.push_back({index(r, r, xpow % s_, ypow % s_, monomial_index(ui, vj)), CycScalar(1)});
  return normalize_terms(std::move(out));
}

void Algebra::build_generators() {
  const int k = spec_.block();
  const int f = spec_.f;
  auto add = [this](std::vector<Term> terms) {
    generators_.push_back(normalize_terms(std::move(terms)));
  };
  if (f > 1) {
    for (int P = 0; P < f; ++P)
      for (int Q = 0; Q < f; ++Q) {
        std::vector<Term> t;
        for (int i = 0; i < k; ++i) t.push_back({index(P * k + i, Q * k + i, 0, 0, 0), 1});
        add(std::move(t));
      }
  }
  if (k > 1) {
    for (int i = 0; i < k; ++i) {
      std::vector<Term> t;
      for (int P = 0; P < f; ++P) t.push_back({index(P * k + i, P * k + i, 0, 0, 0), 1});
      add(std::move(t));
    }
    for (int i = 0; i + 1 < k; ++i) {
      std::vector<Term> t;
      for (int P = 0; P < f; ++P) t.push_back({index(P * k + i, P * k + i + 1, 0, 0, 0), 1});
      add(std::move(t));
    }
    std::vector<Term> wrap;
    for (int P = 0; P < f; ++P) wrap.push_back({index(P * k + k - 1, P * k, 0, 0, 0), 1});
    add(std::move(wrap));
  }
  generators_.push_back(diagonal_skew(1, 0));
  generators_.push_back(diagonal_skew(0, 1));
  if (s_ > 1) {
    generators_.push_back(diagonal_skew(s_, 0));
    generators_.push_back(diagonal_skew(0, s_));
  }
  for (const auto& g : generators_) {
    const SparseVec sq = multiply(g, g);
    if (sq == g) {
      generator_types_.push_back(GeneratorType::Idempotent);
      continue;
    }
    SparseVec p = sq;
    for (int step = 0; step < s_ * spec_.N + 2 && !p.empty(); ++step) p = multiply(p, g);
    if (!p.empty()) throw std::logic_error("generator is neither idempotent nor nilpotent");
    generator_types_.push_back(GeneratorType::Nilpotent);
  }
}

SparseVec Algebra::dual_generator() const {
  if (spec_.kind == AlgebraKind::Unramified) return one();
  if (spec_.kind != AlgebraKind::SmoothRam)
    throw Error(ErrorCode::SpecMismatch, "dual generator is defined for Unramified and SmoothRam",
                spec_.describe());
  const int e = spec_.e;
  std::vector<Term> t;
  for (int P = 0; P < spec_.f; ++P) {
    for (int i = 0; i + 1 < e; ++i) t.push_back({index(P * e + i, P * e + i + 1, 0, 0, 0), 1});
    t.push_back({index(P * e + e - 1, P * e, 0, 0, 0), 1});
  }
  return normalize_terms(std::move(t));
}

SparseVec Algebra::conjugate_by_dual(const SparseVec& w) const {
  if (spec_.kind == AlgebraKind::Unramified) return w;
  const SparseVec c = dual_generator();
  SparseVec prod = multiply(w, c);
  for (int i = 1; i < spec_.e; ++i) prod = multiply(c, prod);
  SparseVec out;
  out.reserve(prod.size());
  for (const auto& t : prod) {
    const Label& l = labels_[t.index];
    const auto [i, j] = mono_exps_[l.mono];
    if (i < 1) throw std::logic_error("conjugate is not divisible by u");
    out.push_back({index(l.row, l.col, l.xpow, l.ypow, monomial_index(i - 1, j)), t.value});
  }
  return normalize_terms(std::move(out));
}

AlgebraElement::AlgebraElement(std::shared_ptr<const Algebra> algebra, SparseVec coords)
    : algebra_(std::move(algebra)), coords_(std::move(coords)) {
  for (const auto& t : coords_)
    if (t.index >= algebra_->dim())
      throw Error(ErrorCode::OutOfRange, "coordinate outside the truncated algebra");
}

AlgebraElement AlgebraElement::zero(std::shared_ptr<const Algebra> algebra) {
  return AlgebraElement(std::move(algebra), {});
}

AlgebraElement AlgebraElement::one(std::shared_ptr<const Algebra> algebra) {
  SparseVec o = algebra->one();
  return AlgebraElement(std::move(algebra), std::move(o));
}

namespace {

void require_same(const AlgebraElement& a, const AlgebraElement& b) {
  if (a.spec() != b.spec())
    throw Error(ErrorCode::TruncMismatch, "operands belong to different algebras",
                a.spec().describe() + " vs " + b.spec().describe());
}

} // namespace

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  require_same(*this, o);
  coords_ = axpy(coords_, CycScalar(1), o.coords_);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
  require_same(*this, o);
  coords_ = axpy(coords_, CycScalar(-1), o.coords_);
  return *this;
}

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) { return alg_mul(a, b); }

AlgebraElement operator*(const CycScalar& c, const AlgebraElement& a) {
  SparseVec v = a.coords_;
  scale(v, c);
  return AlgebraElement(a.algebra_, std::move(v));
}

bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
  return a.spec() == b.spec() && a.coords_ == b.coords_;
}

AlgebraElement alg_mul(const AlgebraElement& a, const AlgebraElement& b) {
  require_same(a, b);
  return AlgebraElement(a.algebra_ptr(), a.algebra().multiply(a.coords(), b.coords()));
}

AlgebraElement basis_times(const std::shared_ptr<const Algebra>& algebra, int i, int j,
                           const TruncSeries& s) {
  const int n = algebra->matrix_size();
  if (i < 1 || i > n || j < 1 || j > n)
    throw Error(ErrorCode::OutOfRange, "matrix position out of range",
                "(" + std::to_string(i) + "," + std::to_string(j) + ")");
  if (s.trunc_order() != algebra->spec().N)
    throw Error(ErrorCode::TruncMismatch, "series truncation differs from algebra truncation");
  SparseVec out;
  for (const auto& t : s.coeffs()) out.push_back({algebra->index(i - 1, j - 1, 0, 0, t.index), t.value});
  return AlgebraElement(algebra, std::move(out));
}

AlgebraElement standard_basis(const std::shared_ptr<const Algebra>& algebra, int i, int j) {
  if (algebra->spec().kind != AlgebraKind::SmoothRam)
    throw Error(ErrorCode::SpecMismatch, "standard basis b_ij is defined for SmoothRam",
                algebra->spec().describe());
  return basis_times(algebra, i, j, TruncSeries::constant(algebra->spec().N, CycScalar(1)));
}

AlgebraElement dual_shift_element(const std::shared_ptr<const Algebra>& algebra) {
  if (algebra->spec().kind != AlgebraKind::SmoothRam)
    throw Error(ErrorCode::SpecMismatch, "dual shift element is defined for SmoothRam",
                algebra->spec().describe());
  return AlgebraElement(algebra, algebra->dual_generator());
}

std::vector<AlgebraElement> maximal_ideal(const std::shared_ptr<const Algebra>& algebra, int i) {
  const AlgebraSpec& spec = algebra->spec();
  const int k = spec.block();
  if (k > 1 && (i < 1 || i > k))
    throw Error(ErrorCode::OutOfRange, "maximal ideal index out of range", std::to_string(i));
  const int target = k > 1 ? i - 1 : 0;
  const int n = algebra->matrix_size();
  const int s = algebra->skew_order();
  std::vector<AlgebraElement> gens;
  // Diagonal position `target` of every block is cut down to the maximal
  // ideal of S; every other position keeps its full entry module.
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      if (r % k == target && c % k == target) {
        if (s > 1) {
          gens.emplace_back(algebra, SparseVec{{algebra->index(r, c, 1, 0, 0), 1}});
          gens.emplace_back(algebra, SparseVec{{algebra->index(r, c, 0, 1, 0), 1}});
        } else {
          gens.emplace_back(algebra, SparseVec{{algebra->index(r, c, 0, 0, monomial_index(1, 0)), 1}});
          gens.emplace_back(algebra, SparseVec{{algebra->index(r, c, 0, 0, monomial_index(0, 1)), 1}});
        }
      } else {
        gens.emplace_back(algebra, SparseVec{{algebra->index(r, c, 0, 0, 0), 1}});
      }
    }
  return gens;
}

} // namespace punctual
