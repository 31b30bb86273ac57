#include "eqc/Error.hpp"
#include "eqc/numerics/ComplexTable.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <random>

using eqc::ComplexTable;
using eqc::ComplexValue;

TEST(ComplexTable, ZeroIsCanonicalZero) {
  ComplexTable t;
  const auto z = t.lookup(0., 0.);
  EXPECT_TRUE(z.exactlyZero());
  EXPECT_TRUE(z.identical(t.lookup(0., 0.)));
}

TEST(ComplexTable, NearbyValueCollapsesOntoSeed) {
  ComplexTable t;
  const auto v = t.lookup(ComplexTable::SqrtHalf + 1e-12, 0.);
  EXPECT_EQ(v.re, ComplexTable::SqrtHalf);
  EXPECT_TRUE(v.identical(t.lookup(ComplexTable::SqrtHalf, 0.)));
}

TEST(ComplexTable, EighthRootOfUnity) {
  ComplexTable t;
  const auto v = t.lookup(0.7071067811865476, -0.7071067811865476);
  const double c = std::cos(std::numbers::pi / 4);
  const double s = -std::sin(std::numbers::pi / 4);
  EXPECT_TRUE(eqc::approxEq(v, {c, s}, t.tolerance()));
  EXPECT_TRUE(v.identical(t.lookup(c, s)));
}

TEST(ComplexTable, NegativeNearbyValuesCollapse) {
  ComplexTable t;
  const auto a = t.lookup(-0.3, 0.2);
  const auto b = t.lookup(-0.3 - 4e-11, 0.2 + 1e-11);
  EXPECT_TRUE(a.identical(b));
}

TEST(ComplexTable, ValuesAcrossBucketBorderCollapse) {
  ComplexTable t(1e-3);
  // 0.0099995 and 0.0100004 fall in buckets 9 and 10
  const double a = t.lookupReal(0.0099995);
  const double b = t.lookupReal(0.0100004);
  EXPECT_EQ(a, b);
}

TEST(ComplexTable, DistinctValuesStayDistinct) {
  ComplexTable t;
  const auto a = t.lookup(1., 0.);
  const auto b = t.lookup(1. + 2 * t.tolerance(), 0.);
  EXPECT_FALSE(a.identical(b));
}

TEST(ComplexTable, NonFiniteInputThrows) {
  ComplexTable t;
  const double nan = std::numeric_limits<double>::quiet_NaN();
  const double inf = std::numeric_limits<double>::infinity();
  for (const auto& [re, im] : {std::pair{nan, 0.}, {0., nan}, {inf, 0.}, {0., -inf}}) {
    try {
      (void)t.lookup(re, im);
      FAIL() << "no exception";
    } catch (const eqc::Error& e) {
      EXPECT_EQ(e.code(), eqc::ErrorCode::NonFiniteValue);
    }
  }
}

TEST(ComplexTable, RejectsBadTolerance) {
  EXPECT_THROW(ComplexTable(0.), eqc::Error);
  EXPECT_THROW(ComplexTable(-1.), eqc::Error);
  EXPECT_THROW(ComplexTable(std::numeric_limits<double>::infinity()), eqc::Error);
}

TEST(ComplexTable, BelowToleranceIsZero) {
  ComplexTable t;
  EXPECT_EQ(t.lookupReal(9e-11), 0.);
  EXPECT_EQ(t.lookupReal(-9e-11), 0.);
  EXPECT_NE(t.lookupReal(2e-10), 0.);
}

TEST(ComplexTable, SmallValuesKeepRelativePrecision) {
  ComplexTable t;
  const double a = -4.3368161432872518e-05;
  const double b = -4.3368261071013551e-05;
  EXPECT_EQ(t.lookupReal(a), a);
  EXPECT_EQ(t.lookupReal(b), b);
  // but noise-level differences still collapse
  EXPECT_EQ(t.lookupReal(a * (1. + 1e-14)), a);
}

TEST(ComplexTable, LargeValuesUseAbsoluteTolerance) {
  ComplexTable t;
  const double a = t.lookupReal(466.50623225955354);
  EXPECT_EQ(t.lookupReal(466.50623225955354 + 5e-11), a);
  EXPECT_NE(t.lookupReal(466.50623225955354 + 3e-10), a);
}

TEST(ComplexTable, HugeValuesAreKeptExactly) {
  ComplexTable t;
  const double big = 1e300;
  EXPECT_EQ(t.lookupReal(big), big);
  EXPECT_EQ(t.lookupReal(-big), -big);
}

TEST(ComplexTable, LookupIsIdempotentOnRandomInputs) {
  ComplexTable t;
  std::mt19937_64 gen(7);
  std::uniform_real_distribution<double> d(-2., 2.);
  for (int i = 0; i < 1'000'000; ++i) {
    const ComplexValue x{d(gen), d(gen)};
    const auto once = t.lookup(x);
    const auto twice = t.lookup(once);
    ASSERT_TRUE(once.identical(twice)) << i;
    ASSERT_LT(std::abs(once.re - x.re), t.tolerance());
    ASSERT_LT(std::abs(once.im - x.im), t.tolerance());
  }
}

TEST(ComplexTable, SeedsSurviveBitExactly) {
  ComplexTable t;
  std::mt19937_64 gen(3);
  std::uniform_real_distribution<double> d(-1., 1.);
  for (int i = 0; i < 10000; ++i) {
    (void)t.lookup(d(gen), d(gen));
  }
  for (const double s : {0., 1., -1., ComplexTable::SqrtHalf, -ComplexTable::SqrtHalf, 0.5, -0.5}) {
    EXPECT_EQ(t.lookupReal(s), s);
    EXPECT_EQ(t.lookupReal(s + 0.4 * t.tolerance()), s);
    EXPECT_EQ(t.lookupReal(s - 0.4 * t.tolerance()), s);
  }
  t.reset();
  EXPECT_EQ(t.size(), 6U);
  EXPECT_EQ(t.lookupReal(ComplexTable::SqrtHalf), ComplexTable::SqrtHalf);
}

TEST(ComplexValue, ApproxEqIsStrictPerComponent) {
  const double eps = 1e-10;
  EXPECT_TRUE(eqc::approxEq({1., 0.}, {1., 0.}, eps));
  EXPECT_FALSE(eqc::approxEq({1., 0.}, {1. + 2 * eps, 0.}, eps));
  EXPECT_FALSE(eqc::approxEq({0., 1.}, {0., 1. + 2 * eps}, eps));
}

TEST(ComplexValue, OmegaMatchesOnePlusIOverSqrtTwo) {
  const ComplexValue omega = ComplexValue(1., 1.) * (1. / std::sqrt(2.));
  EXPECT_TRUE(eqc::approxEq({ComplexTable::SqrtHalf, ComplexTable::SqrtHalf},
                            omega, 1e-10));
}

TEST(ComplexValue, ArithmeticMatchesExtendedPrecision) {
  std::mt19937_64 gen(11);
  std::uniform_real_distribution<double> d(-3., 3.);
  using L = std::complex<long double>;
  for (int i = 0; i < 20000; ++i) {
    const ComplexValue a{d(gen), d(gen)};
    const ComplexValue b{d(gen), d(gen)};
    const L la{a.re, a.im};
    const L lb{b.re, b.im};
    auto close = [](ComplexValue x, L y) {
      return std::abs(static_cast<long double>(x.re) - y.real()) < 1e-12L &&
             std::abs(static_cast<long double>(x.im) - y.imag()) < 1e-12L;
    };
    ASSERT_TRUE(close(a + b, la + lb));
    ASSERT_TRUE(close(a * b, la * lb));
    ASSERT_TRUE(close(a.conj(), std::conj(la)));
    ASSERT_NEAR(a.mag2(), static_cast<double>(std::norm(la)), 1e-12);
    if (std::abs(lb) > 0.1L) {
      ASSERT_TRUE(close(a / b, la / lb));
    }
  }
}

TEST(ComplexValue, NormalizePhaseRange) {
  const double pi = std::numbers::pi;
  EXPECT_DOUBLE_EQ(eqc::normalizePhase(-pi / 2), 3 * pi / 2);
  EXPECT_DOUBLE_EQ(eqc::normalizePhase(pi / 2), pi / 2);
  EXPECT_DOUBLE_EQ(eqc::normalizePhase(2 * pi), 0.);
  EXPECT_DOUBLE_EQ(eqc::normalizePhase(5 * pi), pi);
}
