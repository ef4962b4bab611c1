#include "punctual/cyclotomic.hpp"

#include "punctual/error.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>

namespace punctual {

namespace qpoly {

void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int degree(const QPoly& p) { return static_cast<int>(p.size()) - 1; }

QPoly mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

QPoly sub(const QPoly& a, const QPoly& b) {
  QPoly r(std::max(a.size(), b.size()), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b) {
  if (b.empty()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
  QPoly rem = a;
  trim(rem);
  const int db = degree(b);
  if (degree(rem) < db) return {QPoly{}, rem};
  QPoly quot(rem.size() - b.size() + 1, Rational(0));
  const Rational lead = b.back();
  while (!rem.empty() && degree(rem) >= db) {
    const int shift = degree(rem) - db;
    const Rational c = rem.back() / lead;
    quot[shift] = c;
    for (int i = 0; i <= db; ++i) rem[shift + i] -= c * b[i];
    trim(rem);
  }
  trim(quot);
  return {quot, rem};
}

} // namespace qpoly

int euler_phi(int n) {
  int count = 0;
  for (int k = 1; k <= n; ++k)
    if (std::gcd(k, n) == 1) ++count;
  return count;
}

QPoly cyclotomic_poly(int e) {
  if (e < 1) throw Error(ErrorCode::InvalidSpec, "cyclotomic order must be positive");
  // x^e - 1 = prod_{d | e} Phi_d
  QPoly p(e + 1, Rational(0));
  p[0] = -1;
  p[e] = 1;
  for (int d = 1; d < e; ++d) {
    if (e % d != 0) continue;
    p = qpoly::divmod(p, cyclotomic_poly(d)).first;
  }
  return p;
}

CyclotomicField::CyclotomicField(int order) : order_(order), modulus_(cyclotomic_poly(order)) {
  degree_ = qpoly::degree(modulus_);
  // z^d = -(Phi - z^d)
  QPoly power(modulus_.begin(), modulus_.end() - 1);
  for (auto& c : power) c = -c;
  for (int k = 0; k + 1 < degree_; ++k) {
    high_powers_.push_back(power);
    QPoly shifted(power.size() + 1, Rational(0));
    for (std::size_t i = 0; i < power.size(); ++i) shifted[i + 1] = power[i];
    power = qpoly::divmod(shifted, modulus_).second;
    power.resize(degree_, Rational(0));
  }
}

const CyclotomicField& CyclotomicField::get(int order) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<CyclotomicField>> fields;
  if (order < 1) throw Error(ErrorCode::InvalidSpec, "cyclotomic order must be positive");
  std::lock_guard lock(mutex);
  auto& slot = fields[order];
  if (!slot) slot = std::make_unique<CyclotomicField>(order);
  return *slot;
}

namespace {

const CyclotomicField& rationals() {
  static const CyclotomicField& q = CyclotomicField::get(1);
  return q;
}

} // namespace

CycScalar::CycScalar() : field_(&rationals()), coeffs_{Rational(0)} {}

CycScalar::CycScalar(long value) : field_(&rationals()), coeffs_{Rational(value)} {}

CycScalar::CycScalar(Rational value, int order) : field_(&CyclotomicField::get(order)) {
  coeffs_.assign(field_->degree(), Rational(0));
  coeffs_[0] = std::move(value);
}

CycScalar::CycScalar(const CyclotomicField& field, Coeffs coeffs)
    : field_(&field), coeffs_(std::move(coeffs)) {
  coeffs_.resize(field.degree(), Rational(0));
}

CycScalar CycScalar::zero(int order) { return CycScalar(Rational(0), order); }
CycScalar CycScalar::one(int order) { return CycScalar(Rational(1), order); }

CycScalar CycScalar::zeta(int order, long power) {
  const auto& field = CyclotomicField::get(order);
  long p = power % order;
  if (p < 0) p += order;
  QPoly mono(p + 1, Rational(0));
  mono[p] = 1;
  QPoly rem = qpoly::divmod(mono, field.modulus()).second;
  return CycScalar(field, Coeffs(rem.begin(), rem.end()));
}

bool CycScalar::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool CycScalar::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

bool CycScalar::is_one() const { return is_rational() && coeffs_[0] == 1; }

const CyclotomicField& CycScalar::unify(const CycScalar& o) {
  if (field_ == o.field_ || o.is_rational()) return *field_;
  if (is_rational()) {
    Rational r = coeffs_[0];
    field_ = o.field_;
    coeffs_.assign(field_->degree(), Rational(0));
    coeffs_[0] = std::move(r);
    return *field_;
  }
  throw Error(ErrorCode::OrderMismatch, "scalars from different cyclotomic fields",
              to_string() + " vs " + o.to_string());
}

CycScalar& CycScalar::operator+=(const CycScalar& o) {
  unify(o);
  if (field_ == o.field_) {
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  } else {
    coeffs_[0] += o.coeffs_[0];
  }
  return *this;
}

CycScalar& CycScalar::operator-=(const CycScalar& o) {
  unify(o);
  if (field_ == o.field_) {
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  } else {
    coeffs_[0] -= o.coeffs_[0];
  }
  return *this;
}

CycScalar CycScalar::operator-() const {
  CycScalar r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

CycScalar operator*(const CycScalar& a, const CycScalar& b) {
  if (a.field_ == b.field_ && a.field_->degree() == 1) {
    CycScalar r = a;
    r.coeffs_[0] *= b.coeffs_[0];
    return r;
  }
  if (a.field_ != b.field_ && (a.is_rational() || b.is_rational())) {
    // Scale the non-rational side (or the larger field) by the rational one.
    const bool scale_a = b.is_rational() && (!a.is_rational() || a.order() >= b.order());
    const CycScalar& base = scale_a ? a : b;
    const Rational& k = scale_a ? b.coeffs_[0] : a.coeffs_[0];
    CycScalar r = base;
    for (auto& c : r.coeffs_) c *= k;
    return r;
  }
  if (a.field_ != b.field_)
    throw Error(ErrorCode::OrderMismatch, "scalars from different cyclotomic fields",
                a.to_string() + " vs " + b.to_string());
  const int d = a.field_->degree();
  CycScalar::Coeffs prod(2 * d - 1, Rational(0));
  for (int i = 0; i < d; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (int j = 0; j < d; ++j) prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  const auto& high = a.field_->high_powers();
  for (int k = d; k < 2 * d - 1; ++k) {
    if (prod[k] == 0) continue;
    const QPoly& red = high[k - d];
    for (std::size_t i = 0; i < red.size(); ++i) prod[i] += prod[k] * red[i];
  }
  prod.resize(d);
  return CycScalar(*a.field_, std::move(prod));
}

CycScalar& CycScalar::operator*=(const CycScalar& o) { return *this = *this * o; }

CycScalar CycScalar::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  if (is_rational()) {
    CycScalar r = *this;
    r.coeffs_[0] = 1 / coeffs_[0];
    return r;
  }
  // Extended Euclid: s*a + t*Phi = g with g a nonzero constant.
  QPoly a(coeffs_.begin(), coeffs_.end());
  qpoly::trim(a);
  QPoly r0 = field_->modulus(), r1 = a;
  QPoly s0{}, s1{Rational(1)};
  while (qpoly::degree(r1) > 0) {
    auto [q, r] = qpoly::divmod(r0, r1);
    QPoly s2 = qpoly::sub(s0, qpoly::mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  const Rational g = r1.at(0);
  for (auto& c : s1) c /= g;
  s1 = qpoly::divmod(s1, field_->modulus()).second;
  return CycScalar(*field_, Coeffs(s1.begin(), s1.end()));
}

CycScalar& CycScalar::operator/=(const CycScalar& o) { return *this = *this * o.inverse(); }

bool operator==(const CycScalar& a, const CycScalar& b) {
  if (a.field_ == b.field_) return a.coeffs_ == b.coeffs_;
  if (a.is_rational() && b.is_rational()) return a.coeffs_[0] == b.coeffs_[0];
  if (a.is_rational() || b.is_rational()) return false;
  throw Error(ErrorCode::OrderMismatch, "comparing scalars from different cyclotomic fields");
}

std::string rational_string(const Rational& r) { return r.get_str(); }

std::string CycScalar::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (c == 0) continue;
    Rational mag = abs(c);
    std::string term;
    if (i == 0) {
      term = rational_string(mag);
    } else {
      term = (mag == 1) ? "" : rational_string(mag) + "*";
      term += (i == 1) ? "z" : "z^" + std::to_string(i);
    }
    if (out.empty()) {
      out = (c < 0 ? "-" : "") + term;
    } else {
      out += (c < 0 ? " - " : " + ") + term;
    }
  }
  return out.empty() ? "0" : out;
}

} // namespace punctual
