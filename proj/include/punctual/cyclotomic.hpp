#pragma once

#include <gmpxx.h>

#include <boost/container/small_vector.hpp>

#include <string>
#include <vector>

namespace punctual {

using Rational = mpq_class;

/// Dense polynomial over Q, lowest degree first, no trailing zeros.
using QPoly = std::vector<Rational>;

namespace qpoly {
void trim(QPoly& p);
QPoly mul(const QPoly& a, const QPoly& b);
QPoly sub(const QPoly& a, const QPoly& b);
/// Quotient and remainder; `b` must be nonzero.
std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b);
int degree(const QPoly& p);
} // namespace qpoly

int euler_phi(int n);

/// The e-th cyclotomic polynomial, monic with integer coefficients.
QPoly cyclotomic_poly(int e);

/// Q(zeta_e) presented as Q[z]/(Phi_e). Instances are created once per order
/// and live for the rest of the process.
class CyclotomicField {
public:
  static const CyclotomicField& get(int order);

  int order() const noexcept { return order_; }
  int degree() const noexcept { return degree_; }
  const QPoly& modulus() const noexcept { return modulus_; }
  // z^(degree + k) reduced mod Phi, for 0 <= k < degree - 1
  const std::vector<QPoly>& high_powers() const noexcept { return high_powers_; }

  explicit CyclotomicField(int order);

private:
  int order_;
  int degree_;
  QPoly modulus_;
  std::vector<QPoly> high_powers_;
};

/// Element of Q(zeta_e). Values of different orders combine only when one of
/// them is rational, which embeds in every cyclotomic field.
class CycScalar {
public:
  using Coeffs = boost::container::small_vector<Rational, 2>;

  CycScalar();
  CycScalar(long value); // NOLINT(google-explicit-constructor)
  explicit CycScalar(Rational value, int order = 1);
  CycScalar(const CyclotomicField& field, Coeffs coeffs);

  static CycScalar zero(int order = 1);
  static CycScalar one(int order = 1);
  /// zeta^power for the primitive order-th root of unity.
  static CycScalar zeta(int order, long power = 1);

  int order() const noexcept { return field_->order(); }
  const CyclotomicField& field() const noexcept { return *field_; }
  const Coeffs& coeffs() const noexcept { return coeffs_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;

  CycScalar inverse() const;

  CycScalar& operator+=(const CycScalar& o);
  CycScalar& operator-=(const CycScalar& o);
  CycScalar& operator*=(const CycScalar& o);
  CycScalar& operator/=(const CycScalar& o);
  CycScalar operator-() const;

  friend CycScalar operator+(CycScalar a, const CycScalar& b) { return a += b; }
  friend CycScalar operator-(CycScalar a, const CycScalar& b) { return a -= b; }
  friend CycScalar operator*(const CycScalar& a, const CycScalar& b);
  friend CycScalar operator/(CycScalar a, const CycScalar& b) { return a /= b; }
  friend bool operator==(const CycScalar& a, const CycScalar& b);
  friend bool operator!=(const CycScalar& a, const CycScalar& b) { return !(a == b); }

  /// "c0 + c1*z + ..." with exact rational coefficients.
  std::string to_string() const;

private:
  const CyclotomicField* field_;
  Coeffs coeffs_;

  // Brings `o` into this field (or this into o's) and returns the common field.
  const CyclotomicField& unify(const CycScalar& o);
};

/// Canonical "p/q" (or "p") form of a rational.
std::string rational_string(const Rational& r);

} // namespace punctual
