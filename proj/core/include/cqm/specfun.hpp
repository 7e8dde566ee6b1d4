#pragma once

#include <cstdint>

#include "cqm/types.hpp"

namespace cqm {

// Polar-angle exclusion around the z-axis for angular derivatives, which
// divide by sin(theta).
inline constexpr double kPoleMargin = 1e-6;

inline constexpr int kMaxLaguerreDegree = 60;
inline constexpr int kMaxHarmonicDegree = 8;

struct LaguerreEval {
  double value = 0.0;
  double derivative = 0.0;  // d/dx at the evaluation point
};

// Generalized Laguerre polynomial L_n^(alpha)(x), modern (NIST DLMF 18.5)
// convention, by the upward three-term recurrence. The derivative uses
// d/dx L_n^(alpha) = -L_{n-1}^(alpha+1).
LaguerreEval laguerre(int n, double alpha, double x);

// Value only.
double laguerre_value(int n, double alpha, double x);

// Associated Legendre P_l^m(x) for m >= 0, with the Condon-Shortley phase.
double associated_legendre(int l, int m, double x);

struct SphericalHarmonicEval {
  cplx value;
  cplx dtheta;
  cplx dphi;
};

// Orthonormal complex spherical harmonic Y_lk with Condon-Shortley phase.
// With derivatives requested and l > 0, theta must stay kPoleMargin away
// from the poles.
SphericalHarmonicEval spherical_harmonic(int l, int k, double theta, double phi,
                                         bool with_derivatives = true);

// Exact for n <= 20.
std::uint64_t factorial_exact(int n);

// n! as a double; exact up to 22!.
double factorial(int n);

}  // namespace cqm
