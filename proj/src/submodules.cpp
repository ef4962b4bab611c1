#include "punctual/submodules.hpp"

#include "punctual/error.hpp"

#include <deque>

namespace punctual {

namespace {

// Saturated iff every coordinate of top degree is a pivot: rows pivoting in
// the trailing block are supported there, so they then span all of it.
bool top_degree_pivots(const Algebra& alg, const Subspace& s) {
  const std::uint32_t start = monomial_count(alg.spec().N - 1) * alg.rank();
  for (std::uint32_t i = start; i < alg.dim(); ++i)
    if (!s.is_pivot(i)) return false;
  return true;
}

std::string render(const Algebra& alg, const SparseVec& v) {
  std::string out;
  for (const auto& t : v) {
    const auto& l = alg.label(t.index);
    auto [i, j] = monomial_exponents(l.mono);
    if (!out.empty()) out += " + ";
    out += "(" + t.value.to_string() + ")*E" + std::to_string(l.row + 1) + std::to_string(l.col + 1);
    if (alg.below_pattern(l.row, l.col)) out += "*x";
    if (l.xpow) out += "*x^" + std::to_string(l.xpow);
    if (l.ypow) out += "*y^" + std::to_string(l.ypow);
    if (i + j) out += "*" + monomial_string(i, j);
  }
  return out.empty() ? "0" : out;
}

} // namespace

LeftIdeal::LeftIdeal(std::shared_ptr<const Algebra> algebra, Subspace basis, Trusted)
    : algebra_(std::move(algebra)), basis_(std::move(basis)) {
  if (basis_.ambient_dim() != algebra_->dim())
    throw Error(ErrorCode::TruncMismatch, "subspace does not live in the truncated algebra");
  saturated_ = top_degree_pivots(*algebra_, basis_);
}

LeftIdeal::LeftIdeal(std::shared_ptr<const Algebra> algebra, Subspace basis)
    : LeftIdeal(std::move(algebra), std::move(basis), Trusted{}) {
  for (const auto& [p, row] : basis_.rows())
    for (const auto& g : algebra_->generators()) {
      SparseVec prod = algebra_->multiply(g, row);
      if (!basis_.contains(prod))
        throw Error(ErrorCode::NotAnIdeal, "subspace is not closed under left multiplication",
                    render(*algebra_, prod));
    }
}

LeftIdeal LeftIdeal::assume_closed(std::shared_ptr<const Algebra> algebra, Subspace basis) {
  return LeftIdeal(std::move(algebra), std::move(basis), Trusted{});
}

LeftIdeal LeftIdeal::whole(std::shared_ptr<const Algebra> algebra) {
  Subspace s(algebra->dim());
  for (std::uint32_t i = 0; i < algebra->dim(); ++i) s.insert(unit_vector(i));
  return assume_closed(std::move(algebra), std::move(s));
}

int LeftIdeal::colength() const {
  if (!saturated_)
    throw Error(ErrorCode::NotSaturated,
                "left ideal does not contain m^(N-1) A; colength not certified",
                spec().describe());
  return quotient_dim();
}

Subspace close_subspace(const Algebra& algebra, const std::vector<SparseVec>& seed,
                        ClosureSides sides) {
  Subspace s(algebra.dim());
  std::deque<SparseVec> queue;
  auto push = [&](const SparseVec& v) {
    SparseVec r;
    if (s.insert(v, &r)) queue.push_back(std::move(r));
  };
  for (const auto& v : seed) push(v);
  while (!queue.empty()) {
    SparseVec w = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : algebra.generators()) {
      if (sides.left) push(algebra.multiply(g, w));
      if (sides.right) push(algebra.multiply(w, g));
    }
    if (sides.dual_conjugation) push(algebra.conjugate_by_dual(w));
  }
  return s;
}

LeftIdeal close_left_ideal(const std::shared_ptr<const Algebra>& algebra,
                           const std::vector<SparseVec>& gens) {
  // A g is spanned by the u^i v^j multiples of the structural products b g.
  Subspace s(algebra->dim());
  std::deque<SparseVec> queue;
  auto push = [&](const SparseVec& v) {
    SparseVec r;
    if (s.insert(v, &r)) queue.push_back(std::move(r));
  };
  for (const auto& g : gens)
    for (const auto& b : algebra->structural_basis()) push(algebra->multiply(b, g));
  while (!queue.empty()) {
    SparseVec w = std::move(queue.front());
    queue.pop_front();
    push(algebra->shift(w, 1, 0));
    push(algebra->shift(w, 0, 1));
  }
  return LeftIdeal::assume_closed(algebra, std::move(s));
}

LeftIdeal close_left_ideal(const std::vector<AlgebraElement>& gens) {
  if (gens.empty()) throw Error(ErrorCode::InvalidSpec, "no generators given");
  std::vector<SparseVec> coords;
  for (const auto& g : gens) {
    if (g.spec() != gens.front().spec())
      throw Error(ErrorCode::TruncMismatch, "generators belong to different algebras");
    coords.push_back(g.coords());
  }
  return close_left_ideal(gens.front().algebra_ptr(), coords);
}

ContainmentCheck two_sided_check(const LeftIdeal& ideal) {
  if (!ideal.saturated())
    throw Error(ErrorCode::NotSaturated, "two-sidedness needs a saturated ideal");
  const Algebra& alg = ideal.algebra();
  for (const auto& [p, row] : ideal.basis().rows())
    for (const auto& g : alg.generators()) {
      SparseVec prod = alg.multiply(row, g);
      if (!ideal.contains(prod)) return {false, std::move(prod)};
    }
  return {};
}

bool is_two_sided(const LeftIdeal& ideal) { return two_sided_check(ideal).holds; }

ContainmentCheck dual_containment_check(const LeftIdeal& ideal) {
  const auto kind = ideal.spec().kind;
  if (kind != AlgebraKind::Unramified && kind != AlgebraKind::SmoothRam)
    throw Error(ErrorCode::SpecMismatch, "dual containment is decided for Unramified and SmoothRam",
                ideal.spec().describe());
  if (!ideal.saturated())
    throw Error(ErrorCode::NotSaturated, "dual containment needs a saturated ideal");
  if (kind == AlgebraKind::Unramified) return two_sided_check(ideal);

  // sigma loses the top degree, which the saturated ideal contains anyway.
  const Algebra& alg = ideal.algebra();
  Subspace reached(alg.dim());
  std::deque<SparseVec> queue;
  ContainmentCheck result;
  auto push = [&](SparseVec v) {
    SparseVec r;
    if (!reached.insert(v, &r)) return;
    if (result.holds && !ideal.contains(v)) result = {false, std::move(v)};
    queue.push_back(std::move(r));
  };
  for (const auto& [p, row] : ideal.basis().rows()) push(alg.conjugate_by_dual(row));
  while (!queue.empty() && result.holds) {
    SparseVec w = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : alg.generators()) push(alg.multiply(w, g));
  }
  return result;
}

bool check_dual_containment(const LeftIdeal& ideal) { return dual_containment_check(ideal).holds; }

RowModule RowModule::direct_sum(const std::vector<CommIdeal>& summands) {
  if (summands.empty()) throw Error(ErrorCode::InvalidSpec, "no summands given");
  RowModule m;
  m.f = static_cast<int>(summands.size());
  m.N = summands.front().trunc_order();
  const std::uint32_t monos = monomial_count(m.N);
  m.basis = Subspace(m.f * monos);
  for (int k = 0; k < m.f; ++k) {
    if (summands[k].trunc_order() != m.N)
      throw Error(ErrorCode::TruncMismatch, "summands have different truncation orders");
    for (const auto& [p, row] : summands[k].basis().rows()) {
      SparseVec v;
      for (const auto& t : row) v.push_back({k * monos + t.index, t.value});
      m.basis.insert(v);
    }
  }
  return m;
}

std::optional<std::vector<CommIdeal>> RowModule::summands() const {
  const std::uint32_t monos = monomial_count(N);
  std::vector<Subspace> proj(f, Subspace(monos));
  for (const auto& [p, row] : basis.rows()) {
    std::vector<SparseVec> parts(f);
    for (const auto& t : row) parts[t.index / monos].push_back({t.index % monos, t.value});
    for (int k = 0; k < f; ++k)
      if (!parts[k].empty()) proj[k].insert(parts[k]);
  }
  std::size_t total = 0;
  for (const auto& s : proj) total += s.dim();
  if (total != basis.dim()) return std::nullopt;
  std::vector<CommIdeal> out;
  for (auto& s : proj) out.emplace_back(N, std::move(s));
  return out;
}

bool RowModule::saturated() const {
  const std::uint32_t monos = monomial_count(N);
  for (int k = 0; k < f; ++k)
    for (std::uint32_t m = monomial_count(N - 1); m < monos; ++m)
      if (!basis.contains(unit_vector(k * monos + m))) return false;
  return true;
}

int RowModule::colength() const {
  if (!saturated()) throw Error(ErrorCode::NotSaturated, "module colength not certified");
  return static_cast<int>(basis.codim());
}

namespace {

void require_unramified(const AlgebraSpec& spec) {
  if (spec.kind != AlgebraKind::Unramified)
    throw Error(ErrorCode::SpecMismatch, "Morita reduction to R^f needs an unramified algebra",
                spec.describe());
}

} // namespace

LeftIdeal morita_lift(const std::shared_ptr<const Algebra>& algebra, const RowModule& module) {
  require_unramified(algebra->spec());
  if (module.f != algebra->spec().f || module.N != algebra->spec().N)
    throw Error(ErrorCode::SpecMismatch, "module rank or truncation differs from the algebra",
                algebra->spec().describe());
  const std::uint32_t monos = monomial_count(module.N);
  Subspace s(algebra->dim());
  for (int r = 0; r < module.f; ++r)
    for (const auto& [p, row] : module.basis.rows()) {
      std::vector<Term> v;
      for (const auto& t : row)
        v.push_back({algebra->index(r, static_cast<int>(t.index / monos), 0, 0, t.index % monos),
                     t.value});
      s.insert(normalize_terms(std::move(v)));
    }
  return LeftIdeal(algebra, std::move(s));
}

LeftIdeal morita_lift(const std::shared_ptr<const Algebra>& algebra,
                      const std::vector<CommIdeal>& summands) {
  require_unramified(algebra->spec());
  if (static_cast<int>(summands.size()) != algebra->spec().f)
    throw Error(ErrorCode::SpecMismatch, "expected exactly f summands", algebra->spec().describe());
  return morita_lift(algebra, RowModule::direct_sum(summands));
}

RowModule morita_drop(const LeftIdeal& ideal) {
  require_unramified(ideal.spec());
  const Algebra& alg = ideal.algebra();
  RowModule m;
  m.f = ideal.spec().f;
  m.N = ideal.spec().N;
  const std::uint32_t monos = monomial_count(m.N);
  m.basis = Subspace(m.f * monos);
  for (const auto& [p, row] : ideal.basis().rows()) {
    SparseVec v;
    for (const auto& t : row) {
      const auto& l = alg.label(t.index);
      if (l.row == 0) v.push_back({l.col * monos + l.mono, t.value});
    }
    if (!v.empty()) m.basis.insert(normalize_terms(std::move(v)));
  }
  return m;
}

LeftIdeal block_corner(const LeftIdeal& ideal) {
  const Algebra& alg = ideal.algebra();
  const int k = ideal.spec().block();
  auto corner = Algebra::make(ideal.spec().with_f(1));
  Subspace s(corner->dim());
  for (const auto& [p, row] : ideal.basis().rows()) {
    SparseVec v;
    for (const auto& t : row) {
      const auto& l = alg.label(t.index);
      if (l.row < k && l.col < k) v.push_back({corner->index(l.row, l.col, l.xpow, l.ypow, l.mono), t.value});
    }
    if (!v.empty()) s.insert(v);
  }
  return LeftIdeal::assume_closed(corner, std::move(s));
}

LeftIdeal block_lift(const LeftIdeal& corner, const std::shared_ptr<const Algebra>& target) {
  if (corner.spec() != target->spec().with_f(1))
    throw Error(ErrorCode::SpecMismatch, "corner ideal does not match the target algebra",
                corner.spec().describe() + " vs " + target->spec().describe());
  const Algebra& b = corner.algebra();
  const int k = target->spec().block();
  const int f = target->spec().f;
  Subspace s(target->dim());
  for (const auto& [p, row] : corner.basis().rows())
    for (int P = 0; P < f; ++P)
      for (int Q = 0; Q < f; ++Q) {
        std::vector<Term> v;
        for (const auto& t : row) {
          const auto& l = b.label(t.index);
          v.push_back({target->index(P * k + l.row, Q * k + l.col, l.xpow, l.ypow, l.mono), t.value});
        }
        s.insert(normalize_terms(std::move(v)));
      }
  return LeftIdeal::assume_closed(target, std::move(s));
}

CommIdeal position_ideal(const LeftIdeal& ideal, int row, int col) {
  const Algebra& alg = ideal.algebra();
  if (alg.skew_order() != 1)
    throw Error(ErrorCode::SpecMismatch, "position ideals need commutative entries", ideal.spec().describe());
  const int N = ideal.spec().N;
  const std::uint32_t monos = monomial_count(N);
  Subspace slot(alg.dim());
  for (std::uint32_t m = 0; m < monos; ++m) slot.insert(unit_vector(alg.index(row, col, 0, 0, m)));
  Subspace meet = intersection(ideal.basis(), slot);
  Subspace s(monos);
  for (const auto& [p, r] : meet.rows()) {
    SparseVec v;
    for (const auto& t : r) v.push_back({alg.label(t.index).mono, t.value});
    s.insert(v);
  }
  return CommIdeal(N, std::move(s));
}

std::vector<LeftIdeal> find_codim_one_quotients(const AlgebraSpec& spec, std::size_t max_dim) {
  auto alg = Algebra::make(spec);
  if (alg->dim() > max_dim)
    throw Error(ErrorCode::DimensionBound, "truncated algebra exceeds the dimension bound",
                std::to_string(alg->dim()) + " > " + std::to_string(max_dim));
  // A colength-one left ideal is the kernel of a character, which sends
  // nilpotent generators to 0 and idempotent ones to 0 or 1. The left ideal
  // generated by {g - chi(g)} has colength at most one, so trying every
  // assignment on the idempotents finds all of them.
  std::vector<std::size_t> idem;
  const auto& gens = alg->generators();
  for (std::size_t k = 0; k < gens.size(); ++k)
    if (alg->generator_types()[k] == Algebra::GeneratorType::Idempotent) idem.push_back(k);
  std::vector<LeftIdeal> found;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << idem.size()); ++mask) {
    std::vector<SparseVec> shifted;
    std::size_t bit = 0;
    for (std::size_t k = 0; k < gens.size(); ++k) {
      if (bit < idem.size() && idem[bit] == k) {
        const CycScalar lambda(static_cast<long>((mask >> bit) & 1));
        shifted.push_back(axpy(gens[k], -lambda, alg->one()));
        ++bit;
      } else {
        shifted.push_back(gens[k]);
      }
    }
    LeftIdeal cand = close_left_ideal(alg, shifted);
    if (cand.quotient_dim() != 1) continue;
    bool seen = false;
    for (const auto& f : found) seen = seen || f == cand;
    if (!seen) found.push_back(std::move(cand));
  }
  return found;
}

namespace {

// Basis indices are graded by monomial first, so A_N sits as a prefix of
// A_{N'} for N < N'.
std::vector<SparseVec> move_rows(const Subspace& s, std::size_t limit) {
  std::vector<SparseVec> out;
  for (const auto& [p, row] : s.rows()) {
    SparseVec v;
    for (const auto& t : row)
      if (t.index < limit) v.push_back(t);
    out.push_back(std::move(v));
  }
  return out;
}

} // namespace

LeftIdeal retruncate(const LeftIdeal& ideal, int N) {
  const int from = ideal.spec().N;
  auto target = Algebra::make(ideal.spec().with_truncation(N));
  if (N == from) return ideal;
  if (N < from)
    return LeftIdeal::assume_closed(target, Subspace::span(target->dim(), move_rows(ideal.basis(), target->dim())));
  if (!ideal.saturated()) throw Error(ErrorCode::NotSaturated, "only saturated ideals have a well-defined preimage");
  std::vector<SparseVec> gens = move_rows(ideal.basis(), ideal.algebra().dim());
  for (std::uint32_t i = 0; i < target->dim(); ++i)
    if (target->degree(i) == from - 1) gens.push_back(unit_vector(i));
  return close_left_ideal(target, gens);
}

CommIdeal retruncate(const CommIdeal& ideal, int N) {
  const int from = ideal.trunc_order();
  if (N == from) return ideal;
  if (N < from) return CommIdeal(N, Subspace::span(monomial_count(N), move_rows(ideal.basis(), monomial_count(N))));
  if (!ideal.saturated()) throw Error(ErrorCode::NotSaturated, "only saturated ideals have a well-defined preimage");
  std::vector<TruncSeries> gens;
  for (const auto& row : move_rows(ideal.basis(), monomial_count(from))) gens.push_back(TruncSeries(N, row));
  for (int k = 0; k < from; ++k) gens.push_back(TruncSeries::monomial(N, from - 1 - k, k));
  return ideal_from_generators(gens, N);
}

} // namespace punctual
