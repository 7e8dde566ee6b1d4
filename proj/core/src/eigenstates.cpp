#include "cqm/eigenstates.hpp"

#include <cmath>
#include <numbers>

#include "cqm/error.hpp"
#include "cqm/specfun.hpp"

namespace cqm {

namespace {

struct Jet {
  double v;
  double d1;
  double d2;
};

Jet product(const Jet& a, const Jet& b, const Jet& c) {
  return {a.v * b.v * c.v,
          a.d1 * b.v * c.v + a.v * b.d1 * c.v + a.v * b.v * c.d1,
          a.d2 * b.v * c.v + a.v * b.d2 * c.v + a.v * b.v * c.d2 +
              2.0 * (a.d1 * b.d1 * c.v + a.d1 * b.v * c.d1 + a.v * b.d1 * c.d1)};
}

// x^l and its first two derivatives with respect to r, where x = scale * r.
Jet power_jet(double x, int l, double scale) {
  const double v = std::pow(x, l);
  const double d1 = l == 0 ? 0.0 : l * scale * std::pow(x, l - 1);
  const double d2 = l < 2 ? 0.0 : l * (l - 1.0) * scale * scale * std::pow(x, l - 2);
  return {v, d1, d2};
}

double laguerre_second(int n, double alpha, double x) {
  if (n < 2) return 0.0;
  return laguerre_value(n - 2, alpha + 2.0, x);
}

double angular_norm_integral(int l, int k) {
  const int n_theta = 32;
  const int n_phi = 32;
  const auto rule = gauss_legendre(n_theta);
  double total = 0.0;
  for (int i = 0; i < n_theta; ++i) {
    const double theta = std::acos(rule.nodes[i]);
    for (int j = 0; j < n_phi; ++j) {
      const double phi = 2.0 * std::numbers::pi * j / n_phi;
      total += rule.weights[i] * std::norm(spherical_harmonic(l, k, theta, phi, false).value);
    }
  }
  return total * 2.0 * std::numbers::pi / n_phi;
}

double radial_integral(const Eigenstate& state, const QuadratureConfig& quad) {
  auto integrand = [&state](double r) {
    const double R = radial(state, r).value;
    return R * R * r * r;
  };
  return integrate_refined(integrand, quad).value;
}

}  // namespace

void validate_quantum_numbers(System system, const QuantumNumbers& qn) {
  const bool l_ok = qn.l >= 0 && qn.l <= kMaxHarmonicDegree;
  const bool k_ok = qn.k >= -qn.l && qn.k <= qn.l;
  bool ok = l_ok && k_ok;
  if (system == System::kHydrogen) {
    ok = ok && qn.n >= 1 && qn.l <= qn.n - 1 && qn.n - qn.l - 1 <= kMaxLaguerreDegree;
  } else {
    ok = ok && qn.n >= 0 && qn.n <= kMaxLaguerreDegree;
  }
  if (!ok) {
    throw Error(ErrorKind::kInvalidQuantumNumbers,
                "invalid quantum numbers " + label(system, qn) +
                    (system == System::kHydrogen ? " (need n >= 1, 0 <= l <= n-1, |k| <= l)"
                                                 : " (need n_r >= 0, l >= 0, |k| <= l)"));
  }
}

std::string label(System system, const QuantumNumbers& qn) {
  return std::string(system == System::kHydrogen ? "H" : "HO") + "(" + std::to_string(qn.n) + "," +
         std::to_string(qn.l) + "," + std::to_string(qn.k) + ")";
}

RadialJet radial_shape(const Eigenstate& state, double r) {
  const int l = state.qn.l;
  if (state.system == System::kHydrogen) {
    const int n = state.qn.n;
    const double c = 2.0 / (n * *state.scales.alpha0);
    const double rho = c * r;
    const int degree = n - l - 1;
    const double alpha = 2.0 * l + 1.0;
    const auto lag = laguerre(degree, alpha, rho);
    const Jet a = power_jet(rho, l, c);
    const Jet b{lag.value, c * lag.derivative, c * c * laguerre_second(degree, alpha, rho)};
    const double e = std::exp(-0.5 * rho);
    const Jet ex{e, -0.5 * c * e, 0.25 * c * c * e};
    const Jet f = product(a, b, ex);
    return {f.v, f.d1, f.d2};
  }
  const auto& k = state.scales.constants;
  const double kappa = k.mu * k.omega / k.hbar;
  const double u = kappa * r * r;
  const double du = 2.0 * kappa * r;
  const double alpha = l + 0.5;
  const auto lag = laguerre(state.qn.n, alpha, u);
  const Jet a = power_jet(r, l, 1.0);
  const Jet b{lag.value, lag.derivative * du,
              laguerre_second(state.qn.n, alpha, u) * du * du + lag.derivative * 2.0 * kappa};
  const double e = std::exp(-0.5 * u);
  const Jet ex{e, -kappa * r * e, (kappa * kappa * r * r - kappa) * e};
  const Jet f = product(a, b, ex);
  return {f.v, f.d1, f.d2};
}

RadialJet radial(const Eigenstate& state, double r) {
  auto j = radial_shape(state, r);
  j.value *= state.radial_norm;
  j.d1 *= state.radial_norm;
  j.d2 *= state.radial_norm;
  return j;
}

QuadratureConfig default_quadrature(const Eigenstate& state) {
  QuadratureConfig q;
  q.r_min = state.r_min();
  if (state.system == System::kHydrogen) {
    q.r_max = 60.0 * state.qn.n * *state.scales.alpha0;
  } else {
    q.r_max = 10.0 * state.scales.b * std::sqrt(2.0 * state.qn.n + state.qn.l + 2.0);
  }
  q.initial_panels = 4;
  return q;
}

namespace {

Eigenstate build(const DerivedScales& scales, const QuantumNumbers& qn, System system) {
  if (scales.system != system) {
    throw Error(ErrorKind::kInvalidInput,
                std::string("scales were derived for ") + to_string(scales.system));
  }
  validate_quantum_numbers(system, qn);
  Eigenstate s;
  s.system = system;
  s.qn = qn;
  s.scales = scales;
  s.energy = system == System::kHydrogen ? scales.energy_level(qn.n)
                                         : scales.energy_level(qn.n, qn.l);
  s.radial_norm = 1.0;
  const double integral = radial_integral(s, default_quadrature(s));
  s.radial_norm = 1.0 / std::sqrt(integral);
  return s;
}

}  // namespace

Eigenstate hydrogen_state(const DerivedScales& scales, const QuantumNumbers& qn) {
  return build(scales, qn, System::kHydrogen);
}

Eigenstate oscillator_state(const DerivedScales& scales, const QuantumNumbers& qn) {
  return build(scales, qn, System::kOscillator);
}

Eigenstate make_state(const DerivedScales& scales, const QuantumNumbers& qn) {
  return build(scales, qn, scales.system);
}

AmplitudeJet evaluate(const Eigenstate& state, const Vec3& x, double t) {
  const double r = norm(x);
  if (!(r > state.r_min())) {
    throw Error(ErrorKind::kSingularity, "evaluation point too close to the origin");
  }
  const int l = state.qn.l;
  const double rho_perp = std::hypot(x[0], x[1]);
  const double theta = std::atan2(rho_perp, x[2]);
  const double phi = std::atan2(x[1], x[0]);
  const auto Y = spherical_harmonic(l, state.qn.k, theta, phi, l > 0);
  const auto R = radial(state, r);
  const double hbar = state.scales.constants.hbar;
  const cplx T = std::polar(1.0, -state.energy * t / hbar);

  const double st = std::sin(theta);
  const double ct = std::cos(theta);
  const double sp = std::sin(phi);
  const double cp = std::cos(phi);
  const Vec3 e_r{st * cp, st * sp, ct};
  const Vec3 e_theta{ct * cp, ct * sp, -st};
  const Vec3 e_phi{-sp, cp, 0.0};

  AmplitudeJet jet;
  jet.psi = R.value * Y.value * T;
  const cplx radial_part = R.d1 * Y.value * T;
  const cplx theta_part = l > 0 ? (R.value / r) * Y.dtheta * T : cplx{};
  const cplx phi_part = l > 0 ? (R.value / (r * st)) * Y.dphi * T : cplx{};
  for (int i = 0; i < 3; ++i) {
    jet.grad[i] = radial_part * e_r[i] + theta_part * e_theta[i] + phi_part * e_phi[i];
  }
  const double radial_lap = R.d2 + 2.0 * R.d1 / r - l * (l + 1.0) * R.value / (r * r);
  jet.laplacian = radial_lap * Y.value * T;
  jet.dt = cplx(0.0, -state.energy / hbar) * jet.psi;
  return jet;
}

double normalization_check(const Eigenstate& state, const QuadratureConfig& quad) {
  const double need = state.system == System::kHydrogen
                          ? 40.0 * state.qn.n * *state.scales.alpha0
                          : 10.0 * state.scales.b;
  if (quad.r_max < need * (1.0 - 1e-12)) {
    throw Error(ErrorKind::kInvalidInput, "quadrature r_max too small for " + label(state.system, state.qn));
  }
  return radial_integral(state, quad) * angular_norm_integral(state.qn.l, state.qn.k);
}

double cnl_transcribed(const DerivedScales& scales, int n, int l) {
  validate_quantum_numbers(System::kHydrogen, {n, l, 0});
  const double inv_a = 1.0 / *scales.alpha0;
  const double top = factorial(n - l - 1);
  const double f = factorial(n + l);
  return std::pow(inv_a, 1.5) * (2.0 / (static_cast<double>(n) * n)) * std::sqrt(top / (f * f * f));
}

double cnl_standard(const DerivedScales& scales, int n, int l) {
  validate_quantum_numbers(System::kHydrogen, {n, l, 0});
  const double c = 2.0 / (n * *scales.alpha0);
  return std::sqrt(c * c * c * factorial(n - l - 1) / (2.0 * n * factorial(n + l)));
}

int count_radial_nodes(const Eigenstate& state, double r_max, int samples) {
  int nodes = 0;
  double prev = 0.0;
  for (int i = 1; i <= samples; ++i) {
    const double r = r_max * i / (samples + 1.0);
    const double v = radial_shape(state, r).value;
    if (v == 0.0) continue;
    if (prev != 0.0 && (v > 0.0) != (prev > 0.0)) ++nodes;
    prev = v;
  }
  return nodes;
}

}  // namespace cqm
