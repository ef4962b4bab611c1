#include "punctual/cyclotomic.hpp"
#include "punctual/error.hpp"

#include <gtest/gtest.h>

#include <complex>
#include <numeric>
#include <random>

using namespace punctual;

namespace {

std::complex<double> eval(const QPoly& p, std::complex<double> z) {
  std::complex<double> acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * z + it->get_d();
  return acc;
}

int coprime_count(int n) {
  int c = 0;
  for (int k = 1; k <= n; ++k)
    if (std::gcd(k, n) == 1) ++c;
  return c;
}

CycScalar random_scalar(std::mt19937_64& rng, int order) {
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 5);
  const auto& field = CyclotomicField::get(order);
  CycScalar::Coeffs c;
  for (int i = 0; i < field.degree(); ++i) c.push_back(Rational(num(rng), den(rng)));
  for (auto& r : c) r.canonicalize();
  return CycScalar(field, c);
}

} // namespace

TEST(CyclotomicPoly, SmallCases) {
  EXPECT_EQ(cyclotomic_poly(1), (QPoly{-1, 1}));
  EXPECT_EQ(cyclotomic_poly(2), (QPoly{1, 1}));
  EXPECT_EQ(cyclotomic_poly(4), (QPoly{1, 0, 1}));
}

TEST(CyclotomicPoly, RootsAreExactlyThePrimitiveOnes) {
  const double pi = std::acos(-1.0);
  for (int e = 1; e <= 12; ++e) {
    QPoly p = cyclotomic_poly(e);
    ASSERT_EQ(qpoly::degree(p), coprime_count(e)) << "e=" << e;
    EXPECT_EQ(p.back(), 1);
    for (const auto& c : p) EXPECT_EQ(c.get_den(), 1);
    for (int k = 0; k < e; ++k) {
      const auto z = std::polar(1.0, 2 * pi * k / e);
      const double mag = std::abs(eval(p, z));
      if (std::gcd(k, e) == 1)
        EXPECT_LT(mag, 1e-9) << "e=" << e << " k=" << k;
      else
        EXPECT_GT(mag, 1e-6) << "e=" << e << " k=" << k;
    }
  }
}

TEST(CycScalar, RootOfUnityIdentities) {
  EXPECT_EQ(CycScalar::zeta(2) * CycScalar::zeta(2), CycScalar(1));
  for (int e = 1; e <= 9; ++e) {
    EXPECT_EQ(CycScalar::zeta(e) * CycScalar::zeta(e, e - 1), CycScalar::one(e)) << e;
    CycScalar p = CycScalar::one(e);
    for (int k = 1; k <= e; ++k) {
      p *= CycScalar::zeta(e);
      if (k < e) {
        EXPECT_FALSE(p.is_one()) << "e=" << e << " k=" << k;
        CycScalar d = p - CycScalar::one(e);
        EXPECT_EQ(d * d.inverse(), CycScalar::one(e));
      }
    }
    EXPECT_TRUE(p.is_one()) << e;
  }
}

TEST(CycScalar, HandExpansionOrderFour) {
  const CycScalar z = CycScalar::zeta(4);
  const CycScalar one = CycScalar::one(4);
  EXPECT_EQ((one + z) * (one - z), CycScalar(2));
  EXPECT_EQ(z * z, CycScalar(-1));
}

TEST(CycScalar, DivisionByZero) {
  try {
    (void)CycScalar::zero(3).inverse();
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), ErrorCode::DivisionByZero);
  }
  EXPECT_THROW((void)(CycScalar(1) / CycScalar(0)), Error);
}

TEST(CycScalar, OrdersDoNotMix) {
  try {
    (void)(CycScalar::zeta(3) + CycScalar::zeta(4));
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), ErrorCode::OrderMismatch);
  }
  EXPECT_EQ(CycScalar(2) * CycScalar::zeta(3), CycScalar::zeta(3) + CycScalar::zeta(3));
}

TEST(CycScalar, Rendering) {
  EXPECT_EQ(CycScalar(0).to_string(), "0");
  EXPECT_EQ(CycScalar(Rational(-3, 2)).to_string(), "-3/2");
  EXPECT_EQ((CycScalar(1) - CycScalar::zeta(3)).to_string(), "1 - z");
}

TEST(CycScalarProperty, FieldAxioms) {
  std::mt19937_64 rng(7);
  for (int order : {1, 2, 3, 4, 5, 6, 8}) {
    for (int trial = 0; trial < 40; ++trial) {
      const CycScalar a = random_scalar(rng, order);
      const CycScalar b = random_scalar(rng, order);
      const CycScalar c = random_scalar(rng, order);
      EXPECT_EQ((a * b) * c, a * (b * c));
      EXPECT_EQ(a * (b + c), a * b + a * c);
      EXPECT_EQ(a * b, b * a);
      EXPECT_EQ((a - b) + b, a);
      if (!a.is_zero()) {
        EXPECT_EQ(a * a.inverse(), CycScalar::one(order));
        EXPECT_EQ((b / a) * a, b);
      }
    }
  }
}
