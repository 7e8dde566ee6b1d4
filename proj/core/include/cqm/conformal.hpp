#pragma once

#include <array>

#include "cqm/eigenstates.hpp"
#include "cqm/types.hpp"

namespace cqm {

// Parameters of the complex-time map s = t - i (hbar/E) (r/b)^lambda. The
// map is tied to one energy eigenvalue; b may be +inf, which switches the
// imaginary shift off (s = t).
struct MapParams {
  double energy = -0.5;
  double b = 1.0;
  double lambda = 1.0;
  double hbar = 1.0;

  void validate() const;

  // lambda and b of the state's system, energy of the state.
  static MapParams for_state(const Eigenstate& state);
};

enum class Branch { kDirect, kConjugate };

struct ComplexEvent {
  Vec3 z{};
  cplx s;
  Branch branch = Branch::kDirect;
};

struct SpacetimePoint {
  Vec3 x{};
  double t = 0.0;
};

// (hbar/E) (r/b)^lambda: the magnitude of the imaginary time shift.
double time_shift(double r, const MapParams& p);

// z = x; s = t - i shift (direct) or s* = t + i shift (conjugate).
ComplexEvent map_forward(const Vec3& x, double t, const MapParams& p,
                         Branch branch = Branch::kDirect);

// x = z; t = s + i shift (direct) or s* - i shift (conjugate). Throws
// kInconsistentEvent when Im(s) does not match p.
SpacetimePoint map_inverse(const ComplexEvent& ev, const MapParams& p);

// tau(s) = exp(-i E s / hbar).
cplx tau(cplx s, double energy, double hbar);

// Radial factor in the complex frame: R(r) exp((r/b)^lambda). For hydrogen
// this is C exp(r/a0 - r/(n a0)) (2r/(n a0))^l L(2r/(n a0)), evaluated in the
// combined exponent.
double transformed_radial(const Eigenstate& state, double r);

// psi(z, s) = R~(|z|) Y(theta_z, phi_z) tau(s) for a hydrogen state on the
// direct branch. Oscillator states throw kUnsupported; use
// transformed_wavefunction_general.
cplx transformed_wavefunction(const Eigenstate& state, const ComplexEvent& ev);

// Same construction for any lambda, including the oscillator's exp((r/b)^2)
// factor, which is obtained by the same substitution rather than quoted.
cplx transformed_wavefunction_general(const Eigenstate& state, const ComplexEvent& ev);

struct CauchyRiemannResidual {
  // Laplace form in (t, y), s = t + i y. Symbolically zero.
  double second_order_ty = 0.0;
  // |tau_tt + (b^2 E^2 / hbar^2) tau_rr| with tau_rr by the chain rule.
  double second_order_tr = 0.0;
  // First-order pair |g_t - h_y| and |g_y + h_t| for g = Re tau, h = Im tau.
  double first_order_a = 0.0;
  double first_order_b = 0.0;
  // Central-difference estimate of the (t, r) second-order residual.
  double fd_second_order = 0.0;
  double tau_magnitude = 0.0;
};

// Holomorphy residuals of tau at the point (r, t) of the lambda = 1 map.
// fd_step is dimensionless: the stencil uses fd_step * b in r and
// fd_step * hbar / |E| in t.
CauchyRiemannResidual cr_residual(const MapParams& p, double r, double t, double fd_step);

// Magnitudes of dz_i/ds, ds/dz_i, dz_i*/ds*, ds*/dz_i* (max over i),
// obtained by applying the chain-rule operators to the coordinate functions.
// operator_energy is the E appearing in the operators; defaults to p.energy.
std::array<double, 4> coordinate_independence(const Vec3& x, const MapParams& p,
                                              double operator_energy);
std::array<double, 4> coordinate_independence(const Vec3& x, const MapParams& p);

}  // namespace cqm
