#include "cqm/conformal.hpp"

#include <algorithm>
#include <cmath>

#include "cqm/error.hpp"
#include "cqm/specfun.hpp"

namespace cqm {

void MapParams::validate() const {
  if (energy == 0.0 || !std::isfinite(energy)) {
    throw Error(ErrorKind::kDomain, "map energy must be finite and nonzero");
  }
  if (!(b > 0.0)) throw Error(ErrorKind::kInvalidInput, "map length scale b must be > 0");
  if (!(lambda > 0.0) || !std::isfinite(lambda)) {
    throw Error(ErrorKind::kInvalidInput, "map exponent lambda must be > 0");
  }
  if (!(hbar > 0.0) || !std::isfinite(hbar)) {
    throw Error(ErrorKind::kInvalidInput, "hbar must be > 0");
  }
}

MapParams MapParams::for_state(const Eigenstate& state) {
  MapParams p;
  p.energy = state.energy;
  p.b = state.scales.b;
  p.lambda = state.scales.lambda;
  p.hbar = state.scales.constants.hbar;
  return p;
}

double time_shift(double r, const MapParams& p) {
  return (p.hbar / p.energy) * std::pow(r / p.b, p.lambda);
}

ComplexEvent map_forward(const Vec3& x, double t, const MapParams& p, Branch branch) {
  p.validate();
  const double shift = time_shift(norm(x), p);
  ComplexEvent ev;
  ev.z = x;
  ev.branch = branch;
  ev.s = branch == Branch::kDirect ? cplx(t, -shift) : cplx(t, shift);
  return ev;
}

SpacetimePoint map_inverse(const ComplexEvent& ev, const MapParams& p) {
  p.validate();
  const double shift = time_shift(norm(ev.z), p);
  const cplx t = ev.branch == Branch::kDirect ? ev.s + cplx(0.0, shift) : ev.s - cplx(0.0, shift);
  const double tol = 1e-12 * std::max({1.0, std::abs(shift), std::abs(t.real())});
  if (std::abs(t.imag()) > tol) {
    throw Error(ErrorKind::kInconsistentEvent, "Im(s) does not match the map parameters");
  }
  return {ev.z, t.real()};
}

cplx tau(cplx s, double energy, double hbar) {
  return std::exp(cplx(0.0, -energy / hbar) * s);
}

double transformed_radial(const Eigenstate& state, double r) {
  const int l = state.qn.l;
  if (state.system == System::kHydrogen) {
    const int n = state.qn.n;
    const double a0 = *state.scales.alpha0;
    const double rho = 2.0 * r / (n * a0);
    return state.radial_norm * std::exp(r / a0 - r / (n * a0)) * std::pow(rho, l) *
           laguerre_value(n - l - 1, 2.0 * l + 1.0, rho);
  }
  const auto& c = state.scales.constants;
  const double u = c.mu * c.omega * r * r / c.hbar;
  const double rb = r / state.scales.b;
  return state.radial_norm * std::exp(rb * rb - 0.5 * u) * std::pow(r, l) *
         laguerre_value(state.qn.n, l + 0.5, u);
}

cplx transformed_wavefunction_general(const Eigenstate& state, const ComplexEvent& ev) {
  if (ev.branch != Branch::kDirect) {
    throw Error(ErrorKind::kInvalidInput, "transformed wavefunction is defined on the direct branch");
  }
  const double r = norm(ev.z);
  if (!(r > state.r_min())) throw Error(ErrorKind::kSingularity, "event too close to the origin");
  const double theta = std::atan2(std::hypot(ev.z[0], ev.z[1]), ev.z[2]);
  const double phi = std::atan2(ev.z[1], ev.z[0]);
  const auto Y = spherical_harmonic(state.qn.l, state.qn.k, theta, phi, false);
  return transformed_radial(state, r) * Y.value *
         tau(ev.s, state.energy, state.scales.constants.hbar);
}

cplx transformed_wavefunction(const Eigenstate& state, const ComplexEvent& ev) {
  if (state.system != System::kHydrogen) {
    throw Error(ErrorKind::kUnsupported,
                "transformed_wavefunction covers hydrogen; use transformed_wavefunction_general");
  }
  return transformed_wavefunction_general(state, ev);
}

CauchyRiemannResidual cr_residual(const MapParams& p, double r, double t, double fd_step) {
  p.validate();
  if (p.lambda != 1.0) throw Error(ErrorKind::kInvalidInput, "cr_residual expects lambda = 1");
  if (!(r > 0.0)) throw Error(ErrorKind::kDomain, "cr_residual needs r > 0");
  if (!(fd_step > 0.0)) throw Error(ErrorKind::kStep, "finite-difference step must be > 0");

  const double E = p.energy;
  const double hbar = p.hbar;
  const double dy_dr = -hbar / (p.b * E);  // y = -(hbar / (b E)) r
  auto tau_rt = [&](double rr, double tt) { return tau(cplx(tt, dy_dr * rr), E, hbar); };

  CauchyRiemannResidual out;
  const cplx value = tau_rt(r, t);
  out.tau_magnitude = std::abs(value);

  const cplx kappa(0.0, -E / hbar);  // d tau / ds = kappa tau
  const cplx tau_s = kappa * value;
  const cplx tau_t = tau_s;
  const cplx tau_y(-tau_s.imag(), tau_s.real());  // i tau'(s)
  out.first_order_a = std::abs(tau_t.real() - tau_y.imag());
  out.first_order_b = std::abs(tau_y.real() + tau_t.imag());

  const cplx tau_ss = kappa * kappa * value;
  const cplx tau_tt = tau_ss;
  const cplx tau_yy = -tau_ss;  // (i)^2 tau''(s)
  out.second_order_ty = std::abs(tau_tt + tau_yy);

  const double coeff = (p.b * E / hbar) * (p.b * E / hbar);
  const cplx ds_dr(0.0, dy_dr);
  const cplx tau_rr = tau_ss * ds_dr * ds_dr;
  out.second_order_tr = std::abs(tau_tt + coeff * tau_rr);

  const double h_t = fd_step * hbar / std::abs(E);
  const double h_r = std::min(fd_step * p.b, 0.5 * r);
  const cplx fd_tt = (tau_rt(r, t + h_t) - 2.0 * value + tau_rt(r, t - h_t)) / (h_t * h_t);
  const cplx fd_rr = (tau_rt(r + h_r, t) - 2.0 * value + tau_rt(r - h_r, t)) / (h_r * h_r);
  out.fd_second_order = std::abs(fd_tt + coeff * fd_rr);
  return out;
}

std::array<double, 4> coordinate_independence(const Vec3& x, const MapParams& p,
                                              double operator_energy) {
  p.validate();
  const double r = norm(x);
  if (!(r > 0.0)) throw Error(ErrorKind::kSingularity, "coordinate_independence needs r > 0");
  const double lam = p.lambda;
  const double map_coeff = p.hbar / p.energy;
  const double op_coeff = p.hbar / operator_energy;

  std::array<double, 4> out{};
  for (int i = 0; i < 3; ++i) {
    // d/dx_i (r/b)^lambda via the outer-power chain rule.
    const double dshift = lam * std::pow(r / p.b, lam - 1.0) * (x[i] / (r * p.b));
    // Gauge term b^{-lambda} d r^lambda / d x_i used by the z-derivative.
    const double gauge = std::pow(p.b, -lam) * lam * std::pow(r, lam - 2.0) * x[i];

    // d/ds = d/dt applied to z_i(x, t) = x_i.
    const double dz_ds = 0.0;
    const double dzc_dsc = 0.0;
    // d/dz_i = d/dx_i + i (hbar/E) gauge d/dt applied to s(x, t) = t - i (hbar/E)(r/b)^lambda.
    const cplx ds_dz = cplx(0.0, -map_coeff * dshift) + cplx(0.0, op_coeff * gauge) * 1.0;
    // d/dz_i* = d/dx_i - i (hbar/E) gauge d/dt applied to s* = t + i (hbar/E)(r/b)^lambda.
    const cplx dsc_dzc = cplx(0.0, map_coeff * dshift) - cplx(0.0, op_coeff * gauge) * 1.0;

    out[0] = std::max(out[0], std::abs(dz_ds));
    out[1] = std::max(out[1], std::abs(ds_dz));
    out[2] = std::max(out[2], std::abs(dzc_dsc));
    out[3] = std::max(out[3], std::abs(dsc_dzc));
  }
  return out;
}

std::array<double, 4> coordinate_independence(const Vec3& x, const MapParams& p) {
  return coordinate_independence(x, p, p.energy);
}

}  // namespace cqm
