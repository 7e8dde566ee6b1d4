#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "cqm/error.hpp"
#include "cqm/specfun.hpp"

using namespace cqm;

namespace {

constexpr double kPi = std::numbers::pi;

// Explicit series sum_{i} (-1)^i Gamma(n+a+1) / (Gamma(n-i+1) Gamma(a+i+1) i!) x^i.
long double laguerre_series(int n, long double a, long double x) {
  long double sum = 0.0L;
  for (int i = 0; i <= n; ++i) {
    const long double binom =
        std::exp(std::lgamma(n + a + 1.0L) - std::lgamma(n - i + 1.0L) - std::lgamma(a + i + 1.0L));
    sum += ((i % 2) ? -1.0L : 1.0L) * binom * std::pow(x, i) / std::tgamma(i + 1.0L);
  }
  return sum;
}

}  // namespace

TEST(Laguerre, LowOrderClosedForms) {
  const double a = 1.0;
  const double x = 0.5;
  EXPECT_DOUBLE_EQ(laguerre_value(0, a, x), 1.0);
  EXPECT_DOUBLE_EQ(laguerre_value(1, a, x), 1.0 + a - x);
  EXPECT_NEAR(laguerre_value(2, a, x), 0.5 * (x * x - 2.0 * (a + 2.0) * x + (a + 1.0) * (a + 2.0)), 1e-15);
  EXPECT_NEAR(laguerre_value(2, 1.0, 0.5), 1.625, 1e-15);
}

TEST(Laguerre, MatchesExplicitSeries) {
  for (int n : {0, 1, 2, 3, 5, 8, 12}) {
    for (double a : {0.0, 0.5, 1.0, 2.5, 5.0}) {
      for (double x : {0.0, 0.3, 1.7, 4.0, 9.5}) {
        const double expect = static_cast<double>(laguerre_series(n, a, x));
        EXPECT_NEAR(laguerre_value(n, a, x), expect, 1e-11 * std::max(1.0, std::abs(expect)))
            << "n=" << n << " a=" << a << " x=" << x;
      }
    }
  }
}

TEST(Laguerre, DerivativeIsShiftedPolynomial) {
  for (int n : {1, 3, 6}) {
    const double a = 1.5;
    const double x = 2.2;
    const double h = 1e-5;
    const double fd = (laguerre_value(n, a, x + h) - laguerre_value(n, a, x - h)) / (2.0 * h);
    EXPECT_NEAR(laguerre(n, a, x).derivative, fd, 1e-8);
    EXPECT_DOUBLE_EQ(laguerre(n, a, x).derivative, -laguerre_value(n - 1, a + 1.0, x));
  }
  EXPECT_DOUBLE_EQ(laguerre(0, 1.0, 3.0).derivative, 0.0);
}

TEST(Laguerre, RejectsInvalidArguments) {
  EXPECT_THROW(laguerre(-1, 0.0, 1.0), Error);
  EXPECT_THROW(laguerre(2, -1.5, 1.0), Error);
  EXPECT_THROW(laguerre(kMaxLaguerreDegree + 1, 0.0, 1.0), Error);
  EXPECT_THROW(laguerre(2, 0.0, std::nan("")), Error);
}

TEST(Legendre, ClosedForms) {
  const double x = 0.3;
  const double s = std::sqrt(1.0 - x * x);
  EXPECT_DOUBLE_EQ(associated_legendre(0, 0, x), 1.0);
  EXPECT_NEAR(associated_legendre(1, 0, x), x, 1e-16);
  EXPECT_NEAR(associated_legendre(1, 1, x), -s, 1e-16);
  EXPECT_NEAR(associated_legendre(2, 1, x), -3.0 * x * s, 1e-15);
  EXPECT_NEAR(associated_legendre(2, 2, x), 3.0 * (1.0 - x * x), 1e-15);
  EXPECT_NEAR(associated_legendre(3, 0, x), 0.5 * (5.0 * x * x * x - 3.0 * x), 1e-15);
}

TEST(SphericalHarmonic, ClosedForms) {
  const double th = 0.7;
  const double ph = 1.1;
  const cplx i(0.0, 1.0);
  EXPECT_NEAR(std::abs(spherical_harmonic(0, 0, th, ph).value - 0.5 / std::sqrt(kPi)), 0.0, 1e-16);
  const cplx y10 = std::sqrt(3.0 / (4.0 * kPi)) * std::cos(th);
  EXPECT_NEAR(std::abs(spherical_harmonic(1, 0, th, ph).value - y10), 0.0, 1e-15);
  const cplx y11 = -std::sqrt(3.0 / (8.0 * kPi)) * std::sin(th) * std::exp(i * ph);
  EXPECT_NEAR(std::abs(spherical_harmonic(1, 1, th, ph).value - y11), 0.0, 1e-15);
  const cplx y1m1 = std::sqrt(3.0 / (8.0 * kPi)) * std::sin(th) * std::exp(-i * ph);
  EXPECT_NEAR(std::abs(spherical_harmonic(1, -1, th, ph).value - y1m1), 0.0, 1e-15);
  const cplx y22 = 0.25 * std::sqrt(15.0 / (2.0 * kPi)) * std::pow(std::sin(th), 2) * std::exp(2.0 * i * ph);
  EXPECT_NEAR(std::abs(spherical_harmonic(2, 2, th, ph).value - y22), 0.0, 1e-15);
}

TEST(SphericalHarmonic, DerivativesMatchFiniteDifferences) {
  const double h = 1e-6;
  for (int l = 0; l <= 4; ++l) {
    for (int k = -l; k <= l; ++k) {
      const double th = 1.2;
      const double ph = -0.4;
      const auto y = spherical_harmonic(l, k, th, ph);
      const cplx fd_th = (spherical_harmonic(l, k, th + h, ph).value - spherical_harmonic(l, k, th - h, ph).value) / (2.0 * h);
      const cplx fd_ph = (spherical_harmonic(l, k, th, ph + h).value - spherical_harmonic(l, k, th, ph - h).value) / (2.0 * h);
      EXPECT_NEAR(std::abs(y.dtheta - fd_th), 0.0, 1e-8) << l << "," << k;
      EXPECT_NEAR(std::abs(y.dphi - fd_ph), 0.0, 1e-8) << l << "," << k;
    }
  }
}

TEST(SphericalHarmonic, OrthonormalOnTheSphere) {
  // Midpoint rule in cos(theta) with many nodes; phi by the trapezoid rule,
  // which is exact for trigonometric polynomials of low degree.
  const int nt = 2000;
  const int np = 16;
  auto inner = [&](int l1, int k1, int l2, int k2) {
    cplx sum{};
    for (int a = 0; a < nt; ++a) {
      const double x = -1.0 + (a + 0.5) * 2.0 / nt;
      const double th = std::acos(x);
      for (int b = 0; b < np; ++b) {
        const double ph = 2.0 * kPi * b / np;
        sum += std::conj(spherical_harmonic(l1, k1, th, ph, false).value) *
               spherical_harmonic(l2, k2, th, ph, false).value;
      }
    }
    return sum * (2.0 / nt) * (2.0 * kPi / np);
  };
  EXPECT_NEAR(std::abs(inner(2, 1, 2, 1) - 1.0), 0.0, 1e-5);
  EXPECT_NEAR(std::abs(inner(3, -2, 3, -2) - 1.0), 0.0, 1e-5);
  EXPECT_NEAR(std::abs(inner(2, 1, 3, 1)), 0.0, 1e-5);
  EXPECT_NEAR(std::abs(inner(2, 1, 2, -1)), 0.0, 1e-12);
}

TEST(SphericalHarmonic, GuardsAndValidation) {
  EXPECT_THROW(spherical_harmonic(1, 2, 1.0, 0.0), Error);
  EXPECT_THROW(spherical_harmonic(-1, 0, 1.0, 0.0), Error);
  EXPECT_THROW(spherical_harmonic(kMaxHarmonicDegree + 1, 0, 1.0, 0.0), Error);
  try {
    spherical_harmonic(1, 0, 1e-9, 0.0);
    FAIL() << "expected pole guard";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kPoleProximity);
  }
  EXPECT_NO_THROW(spherical_harmonic(0, 0, 0.0, 0.0));
  EXPECT_NO_THROW(spherical_harmonic(1, 0, 0.0, 0.0, false));
}

TEST(Factorial, ExactAndDouble) {
  EXPECT_EQ(factorial_exact(0), 1u);
  EXPECT_EQ(factorial_exact(20), 2432902008176640000ull);
  EXPECT_DOUBLE_EQ(factorial(5), 120.0);
  EXPECT_THROW(factorial_exact(21), Error);
}
