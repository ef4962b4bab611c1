#include "punctual/series.hpp"

#include "punctual/error.hpp"

#include <deque>

namespace punctual {

std::pair<int, int> monomial_exponents(std::uint32_t index) {
  int d = 0;
  while (monomial_count(d + 1) <= index) ++d;
  const int j = static_cast<int>(index - monomial_count(d));
  return {d - j, j};
}

int monomial_degree(std::uint32_t index) {
  auto [i, j] = monomial_exponents(index);
  return i + j;
}

SparseVec shift_monomials(const SparseVec& v, int di, int dj, int trunc_order) {
  // The shift is monotone in the index, so sortedness is preserved.
  SparseVec out;
  out.reserve(v.size());
  for (const auto& t : v) {
    auto [i, j] = monomial_exponents(t.index);
    if (i + j + di + dj >= trunc_order) continue;
    out.push_back({monomial_index(i + di, j + dj), t.value});
  }
  return out;
}

std::string monomial_string(int i, int j) {
  std::string s;
  auto add = [&s](const char* var, int power) {
    if (power == 0) return;
    if (!s.empty()) s += "*";
    s += var;
    if (power > 1) s += "^" + std::to_string(power);
  };
  add("u", i);
  add("v", j);
  return s.empty() ? "1" : s;
}

namespace {

void check_order(int trunc_order) {
  if (trunc_order < 1) throw Error(ErrorCode::InvalidSpec, "truncation order must be positive");
}

void check_same(int a, int b) {
  if (a != b)
    throw Error(ErrorCode::TruncMismatch, "truncation orders differ",
                std::to_string(a) + " vs " + std::to_string(b));
}

} // namespace

TruncSeries::TruncSeries(int trunc_order) : trunc_order_(trunc_order) { check_order(trunc_order); }

TruncSeries::TruncSeries(int trunc_order, SparseVec coeffs)
    : trunc_order_(trunc_order), coeffs_(std::move(coeffs)) {
  check_order(trunc_order);
  for (const auto& t : coeffs_)
    if (t.index >= monomial_count(trunc_order))
      throw Error(ErrorCode::OutOfRange, "monomial beyond truncation order");
}

TruncSeries TruncSeries::monomial(int trunc_order, int i, int j, CycScalar c) {
  TruncSeries s(trunc_order);
  if (i + j < trunc_order && !c.is_zero()) s.coeffs_.push_back({monomial_index(i, j), std::move(c)});
  return s;
}

TruncSeries TruncSeries::constant(int trunc_order, CycScalar c) {
  return monomial(trunc_order, 0, 0, std::move(c));
}

CycScalar TruncSeries::coefficient(int i, int j) const {
  if (i + j >= trunc_order_) return CycScalar();
  const CycScalar* c = find_coeff(coeffs_, monomial_index(i, j));
  return c ? *c : CycScalar();
}

TruncSeries& TruncSeries::operator+=(const TruncSeries& o) {
  check_same(trunc_order_, o.trunc_order_);
  coeffs_ = axpy(coeffs_, CycScalar(1), o.coeffs_);
  return *this;
}

TruncSeries& TruncSeries::operator-=(const TruncSeries& o) {
  check_same(trunc_order_, o.trunc_order_);
  coeffs_ = axpy(coeffs_, CycScalar(-1), o.coeffs_);
  return *this;
}

TruncSeries TruncSeries::operator-() const {
  TruncSeries r = *this;
  scale(r.coeffs_, CycScalar(-1));
  return r;
}

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
  check_same(a.trunc_order_, b.trunc_order_);
  std::vector<Term> terms;
  for (const auto& x : a.coeffs_) {
    auto [i1, j1] = monomial_exponents(x.index);
    for (const auto& y : b.coeffs_) {
      auto [i2, j2] = monomial_exponents(y.index);
      if (i1 + i2 + j1 + j2 >= a.trunc_order_) continue;
      terms.push_back({monomial_index(i1 + i2, j1 + j2), x.value * y.value});
    }
  }
  return TruncSeries(a.trunc_order_, normalize_terms(std::move(terms)));
}

TruncSeries operator*(const CycScalar& c, const TruncSeries& a) {
  TruncSeries r = a;
  scale(r.coeffs_, c);
  return r;
}

// Renders sum c_k * m_k with the coefficient conventions used for every
// polynomial-like output: unit coefficients are elided, rational signs are
// folded into the separators, and irrational coefficients are parenthesized.
std::string render_terms(const SparseVec& v, const std::function<std::string(std::uint32_t)>& monomial) {
  std::string out;
  for (const auto& t : v) {
    const std::string mono = monomial(t.index);
    std::string body;
    bool negative = false;
    if (t.value.is_rational()) {
      const Rational& c = t.value.coeffs()[0];
      negative = c < 0;
      const Rational mag = abs(c);
      if (mono == "1") {
        body = rational_string(mag);
      } else {
        body = (mag == 1 ? "" : rational_string(mag) + "*") + mono;
      }
    } else {
      body = "(" + t.value.to_string() + ")";
      if (mono != "1") body += "*" + mono;
    }
    if (out.empty()) {
      out = (negative ? "-" : "") + body;
    } else {
      out += (negative ? " - " : " + ") + body;
    }
  }
  return out.empty() ? "0" : out;
}


std::string TruncSeries::to_string() const {
  return render_terms(coeffs_, [](std::uint32_t index) {
    auto [i, j] = monomial_exponents(index);
    return monomial_string(i, j);
  });
}

namespace {

bool contains_top_degree(const Subspace& basis, int trunc_order) {
  for (std::uint32_t m = monomial_count(trunc_order - 1); m < monomial_count(trunc_order); ++m)
    if (!basis.contains(unit_vector(m))) return false;
  return true;
}

// Smallest subspace containing `seed` and closed under multiplication by u, v.
Subspace close_under_uv(const std::vector<SparseVec>& seed, int trunc_order) {
  Subspace s(monomial_count(trunc_order));
  std::deque<SparseVec> queue;
  auto push = [&](const SparseVec& v) {
    SparseVec r;
    if (s.insert(v, &r)) queue.push_back(std::move(r));
  };
  for (const auto& g : seed) push(g);
  while (!queue.empty()) {
    SparseVec w = std::move(queue.front());
    queue.pop_front();
    push(shift_monomials(w, 1, 0, trunc_order));
    push(shift_monomials(w, 0, 1, trunc_order));
  }
  return s;
}

} // namespace

CommIdeal::CommIdeal(int trunc_order, Subspace basis)
    : trunc_order_(trunc_order), basis_(std::move(basis)) {
  check_order(trunc_order);
  if (basis_.ambient_dim() != monomial_count(trunc_order))
    throw Error(ErrorCode::TruncMismatch, "ideal basis does not live in R_N");
  for (const auto& [p, row] : basis_.rows()) {
    for (auto [di, dj] : {std::pair{1, 0}, std::pair{0, 1}}) {
      if (!basis_.contains(shift_monomials(row, di, dj, trunc_order)))
        throw Error(ErrorCode::NotAnIdeal, "subspace is not closed under u and v",
                    TruncSeries(trunc_order, row).to_string());
    }
  }
  saturated_ = contains_top_degree(basis_, trunc_order);
}

CommIdeal CommIdeal::unit(int trunc_order) { return maximal_power(trunc_order, 0); }
CommIdeal CommIdeal::maximal(int trunc_order) { return maximal_power(trunc_order, 1); }

CommIdeal CommIdeal::maximal_power(int trunc_order, int k) {
  check_order(trunc_order);
  Subspace s(monomial_count(trunc_order));
  for (std::uint32_t m = monomial_count(std::min(k, trunc_order)); m < monomial_count(trunc_order); ++m)
    s.insert(unit_vector(m));
  return CommIdeal(trunc_order, std::move(s));
}

int CommIdeal::colength() const {
  if (!saturated_)
    throw Error(ErrorCode::NotSaturated,
                "ideal does not contain all monomials of degree N-1; colength not certified");
  return quotient_dim();
}

std::vector<TruncSeries> CommIdeal::basis_series() const {
  std::vector<TruncSeries> out;
  for (const auto& [p, row] : basis_.rows()) out.emplace_back(trunc_order_, row);
  return out;
}

CommIdeal ideal_from_generators(const std::vector<TruncSeries>& gens, int trunc_order) {
  if (trunc_order < 2) throw Error(ErrorCode::InvalidSpec, "ideals need truncation order >= 2");
  std::vector<SparseVec> seed;
  for (const auto& g : gens) {
    check_same(g.trunc_order(), trunc_order);
    seed.push_back(g.coeffs());
  }
  return CommIdeal(trunc_order, close_under_uv(seed, trunc_order));
}

int colength(const CommIdeal& ideal) { return ideal.colength(); }

CommIdeal ideal_sum(const CommIdeal& a, const CommIdeal& b) {
  check_same(a.trunc_order(), b.trunc_order());
  return CommIdeal(a.trunc_order(), sum(a.basis(), b.basis()));
}

CommIdeal ideal_intersection(const CommIdeal& a, const CommIdeal& b) {
  check_same(a.trunc_order(), b.trunc_order());
  return CommIdeal(a.trunc_order(), intersection(a.basis(), b.basis()));
}

CommIdeal maximal_times(const CommIdeal& ideal) {
  const int n = ideal.trunc_order();
  std::vector<SparseVec> seed;
  for (const auto& [p, row] : ideal.basis().rows()) {
    seed.push_back(shift_monomials(row, 1, 0, n));
    seed.push_back(shift_monomials(row, 0, 1, n));
  }
  return CommIdeal(n, Subspace::span(monomial_count(n), seed));
}

CommIdeal ideal_times(const TruncSeries& s, const CommIdeal& ideal) {
  check_same(s.trunc_order(), ideal.trunc_order());
  std::vector<SparseVec> seed;
  for (const auto& row : ideal.basis_series()) seed.push_back((s * row).coeffs());
  return CommIdeal(ideal.trunc_order(), Subspace::span(monomial_count(ideal.trunc_order()), seed));
}

CommIdeal staircase_ideal(int colength, int trunc_order) {
  if (colength < 0 || monomial_count(trunc_order - 1) < static_cast<std::uint32_t>(colength))
    throw Error(ErrorCode::PrecisionExhausted,
                "truncation order too small for a saturated ideal of this colength");
  Subspace s(monomial_count(trunc_order));
  for (std::uint32_t m = static_cast<std::uint32_t>(colength); m < monomial_count(trunc_order); ++m)
    s.insert(unit_vector(m));
  return CommIdeal(trunc_order, std::move(s));
}

namespace {

void require_saturated(const CommIdeal& j, const char* what) {
  if (!j.saturated())
    throw Error(ErrorCode::NotSaturated, std::string(what) + " is not saturated");
}

CommIdeal require_certified(CommIdeal result) {
  if (!result.saturated())
    throw Error(ErrorCode::PrecisionExhausted,
                "result lost saturation; raise the truncation order");
  return result;
}

// Hyperplane of `outer` through `base` (base must contain m*outer): keeps
// every quotient direction except the one with the smallest pivot.
CommIdeal cosocle_hyperplane(const CommIdeal& outer, const CommIdeal& base) {
  std::vector<SparseVec> q = quotient_basis(outer.basis(), base.basis());
  if (q.empty()) throw Error(ErrorCode::EqualIdeals, "no simple quotient: ideals coincide");
  Subspace h = base.basis();
  for (std::size_t k = 1; k < q.size(); ++k) h.insert(q[k]);
  return CommIdeal(outer.trunc_order(), std::move(h));
}

// Candidates for socle vectors of outer/inner, reduced modulo inner and in
// increasing pivot order.
std::vector<SparseVec> socle_candidates(const CommIdeal& inner, const CommIdeal& outer) {
  const int n = inner.trunc_order();
  const auto dim = monomial_count(n);
  const auto outer_rows = outer.basis().basis();
  std::vector<SparseVec> images;
  for (const auto& w : outer_rows) {
    SparseVec image = inner.basis().reduce(shift_monomials(w, 1, 0, n));
    for (const auto& t : inner.basis().reduce(shift_monomials(w, 0, 1, n)))
      image.push_back({t.index + dim, t.value});
    images.push_back(std::move(image));
  }
  Subspace socle = inner.basis();
  for (const auto& coeffs : kernel(images, 2 * dim)) {
    SparseVec w;
    for (const auto& t : coeffs) w = axpy(w, t.value, outer_rows[t.index]);
    socle.insert(w);
  }
  return quotient_basis(socle, inner.basis());
}

} // namespace

IdealPair socle_and_cosocle_picks(const CommIdeal& inner, const CommIdeal& outer) {
  check_same(inner.trunc_order(), outer.trunc_order());
  require_saturated(inner, "inner ideal");
  require_saturated(outer, "outer ideal");
  if (!outer.contains(inner))
    throw Error(ErrorCode::NotContained, "inner ideal is not contained in outer ideal");
  if (inner == outer) throw Error(ErrorCode::EqualIdeals, "inner and outer ideals coincide");

  CommIdeal smaller = cosocle_hyperplane(outer, ideal_sum(maximal_times(outer), inner));
  auto candidates = socle_candidates(inner, outer);
  // Prefer the last socle direction not already inside `smaller`.
  const SparseVec* pick = &candidates.back();
  for (auto it = candidates.rbegin(); it != candidates.rend(); ++it) {
    if (!smaller.contains(TruncSeries(inner.trunc_order(), *it))) {
      pick = &*it;
      break;
    }
  }
  Subspace larger = inner.basis();
  larger.insert(*pick);
  return {require_certified(std::move(smaller)),
          require_certified(CommIdeal(inner.trunc_order(), std::move(larger)))};
}

CommIdeal nakayama_corank1_pick(const CommIdeal& ideal) {
  require_saturated(ideal, "ideal");
  return require_certified(cosocle_hyperplane(ideal, maximal_times(ideal)));
}

CommIdeal socle_pick(const CommIdeal& ideal) {
  require_saturated(ideal, "ideal");
  if (ideal.is_unit()) throw Error(ErrorCode::IdealIsUnitIdeal, "the unit ideal has no socle");
  auto candidates = socle_candidates(ideal, CommIdeal::unit(ideal.trunc_order()));
  Subspace s = ideal.basis();
  s.insert(candidates.back());
  return require_certified(CommIdeal(ideal.trunc_order(), std::move(s)));
}

} // namespace punctual
