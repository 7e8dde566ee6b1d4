#include "cqm/specfun.hpp"

#include <numbers>
#include <string>

#include "cqm/error.hpp"

namespace cqm {

double laguerre_value(int n, double alpha, double x) {
  if (n < 0 || n > kMaxLaguerreDegree) {
    throw Error(ErrorKind::kDomain,
                "laguerre degree must be in [0, " + std::to_string(kMaxLaguerreDegree) + "]");
  }
  if (!(alpha > -1.0)) throw Error(ErrorKind::kDomain, "laguerre requires alpha > -1");
  if (!(x >= 0.0)) throw Error(ErrorKind::kDomain, "laguerre requires x >= 0");

  if (n == 0) return 1.0;
  double prev = 1.0;
  double curr = 1.0 + alpha - x;
  for (int k = 1; k < n; ++k) {
    const double next = ((2.0 * k + 1.0 + alpha - x) * curr - (k + alpha) * prev) / (k + 1.0);
    prev = curr;
    curr = next;
  }
  return curr;
}

LaguerreEval laguerre(int n, double alpha, double x) {
  LaguerreEval out;
  out.value = laguerre_value(n, alpha, x);
  out.derivative = n == 0 ? 0.0 : -laguerre_value(n - 1, alpha + 1.0, x);
  return out;
}

double associated_legendre(int l, int m, double x) {
  if (m < 0 || m > l) return 0.0;
  // P_m^m = (-1)^m (2m-1)!! (1-x^2)^{m/2}
  const double somx2 = std::sqrt((1.0 - x) * (1.0 + x));
  double pmm = 1.0;
  double fact = 1.0;
  for (int i = 1; i <= m; ++i) {
    pmm *= -fact * somx2;
    fact += 2.0;
  }
  if (l == m) return pmm;
  double pmmp1 = x * (2.0 * m + 1.0) * pmm;
  if (l == m + 1) return pmmp1;
  double pll = 0.0;
  for (int ll = m + 2; ll <= l; ++ll) {
    pll = (x * (2.0 * ll - 1.0) * pmmp1 - (ll + m - 1.0) * pmm) / (ll - m);
    pmm = pmmp1;
    pmmp1 = pll;
  }
  return pll;
}

std::uint64_t factorial_exact(int n) {
  if (n < 0 || n > 20) throw Error(ErrorKind::kDomain, "factorial_exact requires 0 <= n <= 20");
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

double factorial(int n) {
  if (n < 0) throw Error(ErrorKind::kDomain, "factorial of a negative integer");
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

SphericalHarmonicEval spherical_harmonic(int l, int k, double theta, double phi,
                                         bool with_derivatives) {
  if (l < 0 || l > kMaxHarmonicDegree) {
    throw Error(ErrorKind::kDomain,
                "spherical harmonic degree must be in [0, " + std::to_string(kMaxHarmonicDegree) + "]");
  }
  if (k < -l || k > l) throw Error(ErrorKind::kDomain, "spherical harmonic requires |k| <= l");

  const bool need_derivs = with_derivatives && l > 0;
  if (need_derivs && (theta < kPoleMargin || theta > std::numbers::pi - kPoleMargin)) {
    throw Error(ErrorKind::kPoleProximity, "theta within pole margin of the z-axis");
  }

  const int m = k < 0 ? -k : k;
  const double x = std::cos(theta);
  const double norm =
      std::sqrt((2.0 * l + 1.0) / (4.0 * std::numbers::pi) * factorial(l - m) / factorial(l + m));
  const double p = associated_legendre(l, m, x);
  const cplx phase = std::polar(1.0, m * phi);

  SphericalHarmonicEval out;
  out.value = norm * p * phase;
  if (need_derivs) {
    // (x^2 - 1) dP_l^m/dx = l x P_l^m - (l+m) P_{l-1}^m, and d/dtheta = -sin(theta) d/dx.
    const double dp = (l * x * p - (l + m) * associated_legendre(l - 1, m, x)) / std::sin(theta);
    out.dtheta = norm * dp * phase;
    out.dphi = cplx(0.0, m) * out.value;
  }
  if (k < 0) {
    const double sign = (m % 2 == 0) ? 1.0 : -1.0;
    out.value = sign * std::conj(out.value);
    out.dtheta = sign * std::conj(out.dtheta);
    out.dphi = cplx(0.0, k) * out.value;
  }
  return out;
}

}  // namespace cqm
