#include "cqm/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "cqm/error.hpp"
#include "cqm/specfun.hpp"

namespace cqm {

namespace {

constexpr double kTiny = 1e-300;

bool is_guard(const Error& e) {
  return e.kind() == ErrorKind::kSingularity || e.kind() == ErrorKind::kPoleProximity;
}

template <class Fn>
void sweep(const SampleCloud& cloud, ResidualAccumulator& acc, Fn&& fn) {
  for (const auto& p : cloud.points) {
    try {
      fn(p);
    } catch (const Error& e) {
      if (!is_guard(e)) throw;
      acc.skip();
    }
  }
  if (acc.skipped() * 10 > cloud.points.size()) {
    throw Error(ErrorKind::kCloud, "more than 10% of cloud points hit evaluation guards");
  }
}

std::string fmt_g(double v, int digits = 12) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

double potential(const Eigenstate& state, double r) {
  const auto& c = state.scales.constants;
  if (state.system == System::kHydrogen) {
    return -c.charge_e * c.charge_e / (4.0 * std::numbers::pi * c.epsilon0 * r);
  }
  return 0.5 * c.mu * c.omega * c.omega * r * r;
}

double kinetic_prefactor(const PhysicalConstants& c) { return c.hbar * c.hbar / (2.0 * c.mu); }

std::string name_for(const char* prefix, const Eigenstate& state) {
  return std::string(prefix) + "/" + label(state.system, state.qn);
}

// Typical magnitude of psi for a normalized state of this length scale.
double psi_scale(const Eigenstate& state) { return std::pow(state.length_scale(), -1.5); }

}  // namespace

void ResidualAccumulator::add(double abs_residual, double reference, double magnitude) {
  samples_.push_back({abs_residual, reference, magnitude});
}

ResidualStats ResidualAccumulator::finish(std::string name, std::string eq_ref, double tol,
                                          Criterion criterion) const {
  ResidualStats s;
  s.check_name = std::move(name);
  s.eq_ref = std::move(eq_ref);
  s.tol = tol;
  s.criterion = criterion;
  s.n_points = samples_.size();
  double peak = 0.0;
  for (const auto& x : samples_) peak = std::max(peak, x.magnitude);
  double sum = 0.0;
  bool finite = true;
  for (const auto& x : samples_) {
    if (!std::isfinite(x.abs)) finite = false;
    s.max_abs = std::max(s.max_abs, x.abs);
    sum += x.abs;
    if (x.magnitude >= 1e-12 * peak) {
      s.max_rel = std::max(s.max_rel, x.abs / std::max(x.ref, kTiny));
    }
  }
  s.mean_abs = samples_.empty() ? 0.0 : sum / static_cast<double>(samples_.size());
  const double measure = criterion == Criterion::kRelative ? s.max_rel : s.max_abs;
  s.pass = finite && !samples_.empty() && measure <= tol;
  if (skipped_ > 0) s.detail = std::to_string(skipped_) + " points skipped by guards";
  return s;
}

ResidualStats residual_schrodinger(const Eigenstate& state, const SampleCloud& cloud, double tol) {
  const double kin = kinetic_prefactor(state.scales.constants);
  ResidualAccumulator acc;
  sweep(cloud, acc, [&](const SamplePoint& p) {
    const auto jet = evaluate(state, p.x, p.t);
    const double V = potential(state, norm(p.x));
    const cplx res = -kin * jet.laplacian + V * jet.psi - state.energy * jet.psi;
    acc.add(std::abs(res), std::abs(state.energy * jet.psi), std::abs(jet.psi));
  });
  return acc.finish(name_for("schrodinger", state),
                    "-(hbar^2/2mu) lap(psi) + V psi - E psi = 0", tol);
}

ResidualStats residual_transformed(const Eigenstate& state, const SampleCloud& cloud, double tol) {
  const double kin = kinetic_prefactor(state.scales.constants);
  const auto field = make_field(state);
  const auto p = MapParams::for_state(state);
  const double E0 = state.scales.E_ground;
  const double dE = state.energy - E0;
  const bool at_ground = std::abs(dE) <= 1e-14 * std::abs(E0);
  ResidualAccumulator acc;
  sweep(cloud, acc, [&](const SamplePoint& pt) {
    const cplx psi = field(pt.x, pt.t).psi;
    const cplx res = -kin * dzdz_analytic(field, pt.x, pt.t, p) - dE * psi;
    const double ref = at_ground ? std::abs(E0 * psi) : std::abs(dE * psi);
    acc.add(std::abs(res), ref, std::abs(psi));
  });
  return acc.finish(name_for("transformed_schrodinger", state),
                    "-(hbar^2/2mu) d2psi/dz*dz - (E - E0) psi = 0", tol);
}

IdentitySides operator_identity_sides(const FieldHandle& f, const Vec3& x, double t,
                                      const DerivedScales& hydrogen) {
  if (hydrogen.system != System::kHydrogen) {
    throw Error(ErrorKind::kInvalidInput, "operator identity needs hydrogen scales");
  }
  const auto& c = hydrogen.constants;
  const double a0 = *hydrogen.alpha0;
  const double kin = kinetic_prefactor(c);
  MapParams p;
  p.energy = hydrogen.E_ground;
  p.b = a0;
  p.lambda = 1.0;
  p.hbar = c.hbar;
  const auto jet = f(x, t);
  const double r = norm(x);
  IdentitySides out;
  out.lhs = kin * dzdz_analytic(f, x, t, p) + (kin / (a0 * a0)) * jet.psi;
  out.rhs = kin * jet.laplacian +
            (c.charge_e * c.charge_e / (4.0 * std::numbers::pi * c.epsilon0 * r)) * jet.psi;
  return out;
}

ResidualStats residual_operator_identity(const Eigenstate& state, const SampleCloud& cloud,
                                         double tol) {
  if (state.system != System::kHydrogen) {
    throw Error(ErrorKind::kUnsupported, "operator identity is checked on hydrogen states");
  }
  const auto field = make_field(state);
  ResidualAccumulator acc;
  sweep(cloud, acc, [&](const SamplePoint& p) {
    const auto sides = operator_identity_sides(field, p.x, p.t, state.scales);
    const double ref = std::max(std::abs(sides.lhs), std::abs(sides.rhs));
    acc.add(std::abs(sides.lhs - sides.rhs), ref, std::abs(field(p.x, p.t).psi));
  });
  return acc.finish(name_for("operator_identity", state),
                    "(hbar^2/2mu) d2/dz*dz + hbar^2/(2mu a0^2) = (hbar^2/2mu) lap + e^2/(4 pi eps0 r)",
                    tol);
}

ResidualStats transformed_consistency(const Eigenstate& state, const SampleCloud& cloud,
                                      double tol) {
  const auto p = MapParams::for_state(state);
  ResidualAccumulator acc;
  sweep(cloud, acc, [&](const SamplePoint& pt) {
    const auto ev = map_forward(pt.x, pt.t, p);
    const cplx psi_z = transformed_wavefunction_general(state, ev);
    const auto back = map_inverse(ev, p);
    const cplx psi_x = evaluate(state, back.x, back.t).psi;
    acc.add(std::abs(psi_z - psi_x), std::abs(psi_x), std::abs(psi_x));
  });
  return acc.finish(name_for("transformed_wavefunction", state),
                    "R~(r_z) Y(theta_z, phi_z) tau(s) = psi(x, t) at the preimage", tol);
}

ResidualStats jet_fd_gradient(const Eigenstate& state, const SampleCloud& cloud, double tol) {
  const auto field = make_field(state);
  const double h = 1e-3 * state.length_scale();
  const double floor = psi_scale(state) / state.length_scale();
  ResidualAccumulator acc;
  sweep(cloud, acc, [&](const SamplePoint& p) {
    const auto jet = field(p.x, p.t);
    const auto fd = fd_gradient(field, p.x, p.t, h, FdOrder::kFourth);
    const CVec3 diff{jet.grad[0] - fd[0], jet.grad[1] - fd[1], jet.grad[2] - fd[2]};
    acc.add(norm(diff), std::max(floor, norm(jet.grad)));
  });
  return acc.finish(name_for("jet_fd_gradient", state),
                    "analytic grad(psi) = 4th-order central difference", tol);
}

ResidualStats jet_fd_laplacian(const Eigenstate& state, const SampleCloud& cloud, double tol) {
  const auto field = make_field(state);
  const double L = state.length_scale();
  const double h = 1e-3 * L;
  const double floor = psi_scale(state) / (L * L);
  ResidualAccumulator acc;
  sweep(cloud, acc, [&](const SamplePoint& p) {
    const auto jet = field(p.x, p.t);
    const cplx fd = fd_laplacian(field, p.x, p.t, h, FdOrder::kFourth);
    acc.add(std::abs(jet.laplacian - fd), std::max(floor, std::abs(jet.laplacian)));
  });
  return acc.finish(name_for("jet_fd_laplacian", state),
                    "analytic lap(psi) = 4th-order central difference", tol);
}

ResidualStats dzdz_cross_check(const Eigenstate& state, const SampleCloud& cloud, double tol) {
  const auto field = make_field(state);
  const auto p = MapParams::for_state(state);
  const double L = state.length_scale();
  ResidualAccumulator acc;
  sweep(cloud, acc, [&](const SamplePoint& pt) {
    const auto mixed = dzdz_apply(field, pt.x, pt.t, p, 1e-3 * L);
    const double psi = std::abs(field(pt.x, pt.t).psi);
    acc.add(std::abs(mixed.analytic - mixed.nested_fd),
            std::max(std::abs(mixed.analytic), psi / (L * L)), psi);
  });
  return acc.finish(name_for("dzdz_nested_fd", state),
                    "analytic d2/dz*dz = nested finite-difference d/dz* (d/dz)", tol);
}

ResidualStats normalization_stats(const Eigenstate& state, double tol) {
  const double total = normalization_check(state, default_quadrature(state));
  ResidualAccumulator acc;
  acc.add(std::abs(total - 1.0), 1.0);
  auto s = acc.finish(name_for("normalization", state), "integral |psi|^2 d3x = 1", tol,
                      Criterion::kAbsolute);
  s.detail = "integral = " + fmt_g(total, 17);
  return s;
}

DecompositionReport decompose_lambda(const Rational& lambda, double b, const PhysicalConstants& c) {
  if (lambda.num() <= 0) throw Error(ErrorKind::kDomain, "decompose_lambda requires lambda > 0");
  if (!(b > 0.0)) throw Error(ErrorKind::kInvalidInput, "decompose_lambda requires b > 0");
  const Rational two(2);
  const double base = c.hbar * c.hbar / c.mu;
  auto make = [&](Rational factor, Rational b_power, Rational r_power) {
    Monomial m;
    m.factor = factor;
    m.b_power = b_power;
    m.r_power = r_power;
    m.coefficient = factor.to_double() * base / std::pow(b, b_power.to_double());
    return m;
  };

  DecompositionReport rep;
  rep.lambda = lambda;
  rep.term_kinetic = make(lambda * lambda / two, two * lambda, two * lambda - two);
  rep.term_potential_like = make(-(lambda * (lambda + Rational(1))) / two, lambda, lambda - two);
  const bool kinetic_const = rep.term_kinetic.r_power.is_zero();
  const bool potential_const = rep.term_potential_like.r_power.is_zero();
  rep.separable = kinetic_const != potential_const;
  if (rep.separable) {
    const Monomial& constant = kinetic_const ? rep.term_kinetic : rep.term_potential_like;
    rep.V_form = kinetic_const ? rep.term_potential_like : rep.term_kinetic;
    Monomial e0 = constant;
    e0.factor = -constant.factor;
    e0.coefficient = -constant.coefficient;
    rep.E0_form = e0;
    rep.E0_value = e0.coefficient;
  }
  return rep;
}

DecompositionReport decompose_lambda(double lambda, double b, const PhysicalConstants& c) {
  if (!(lambda > 0.0)) throw Error(ErrorKind::kDomain, "decompose_lambda requires lambda > 0");
  return decompose_lambda(Rational::approximate(lambda), b, c);
}

PotentialForm potential_from_lambda(int lambda, double b, const PhysicalConstants& c) {
  const double h2m = c.hbar * c.hbar / c.mu;
  if (lambda == 1) return {-h2m / b, -1, -h2m / (2.0 * b * b)};
  if (lambda == 2) return {2.0 * h2m / (b * b * b * b), 2, 3.0 * h2m / (b * b)};
  throw Error(ErrorKind::kUnsupported, "closed-form V and E0 exist for lambda = 1 and 2 only");
}

ResidualStats check_ev_relation(double lambda, double b, const PhysicalConstants& c,
                                const SampleCloud& cloud, double tol) {
  if (lambda != 1.0 && lambda != 2.0) {
    throw Error(ErrorKind::kUnsupported, "check_ev_relation handles lambda = 1 and 2; use decompose_lambda");
  }
  const int lam = static_cast<int>(lambda);
  const auto form = potential_from_lambda(lam, b, c);
  MapParams p;
  p.energy = 1.0;
  p.b = b;
  p.lambda = lambda;
  p.hbar = c.hbar;
  ResidualAccumulator acc;
  sweep(cloud, acc, [&](const SamplePoint& pt) {
    const double r = norm(pt.x);
    const Vec3 g = gauge_vector(pt.x, p);
    const double lhs = g[0] * g[0] + g[1] * g[1] + g[2] * g[2] - gauge_divergence(pt.x, p);
    const double V = form.V_coefficient * std::pow(r, form.V_power);
    const double rhs = 2.0 * c.mu / (c.hbar * c.hbar) * (V - form.E0);
    const double ref = lambda * lambda * std::pow(r, 2.0 * lambda - 2.0) / std::pow(b, 2.0 * lambda) +
                       lambda * (lambda + 1.0) * std::pow(r, lambda - 2.0) / std::pow(b, lambda);
    acc.add(std::abs(lhs - rhs), ref);
  });
  return acc.finish("ev_relation/lambda=" + std::to_string(lam),
                    "|grad r^l|^2/b^2l - lap r^l/b^l = (2mu/hbar^2)(V - E0)", tol);
}

ResidualStats table_crosscheck(System system, const PhysicalConstants& c, double tol) {
  const auto scales = derive_scales(c, system);
  const int lam = system == System::kHydrogen ? 1 : 2;
  const auto form = potential_from_lambda(lam, scales.b, c);
  double V_table = 0.0;
  double E0_table = 0.0;
  if (system == System::kHydrogen) {
    const double pi = std::numbers::pi;
    const double e2 = c.charge_e * c.charge_e;
    V_table = -e2 / (4.0 * pi * c.epsilon0);
    E0_table = -e2 * e2 * c.mu / (32.0 * pi * pi * c.epsilon0 * c.epsilon0 * c.hbar * c.hbar);
  } else {
    V_table = 0.5 * c.mu * c.omega * c.omega;
    E0_table = 1.5 * c.hbar * c.omega;
  }
  ResidualAccumulator acc;
  acc.add(std::abs(form.V_coefficient - V_table), std::abs(V_table));
  acc.add(std::abs(form.E0 - E0_table), std::abs(E0_table));
  acc.add(std::abs(scales.E_ground - E0_table), std::abs(E0_table));
  auto s = acc.finish(std::string("table_crosscheck/") + to_string(system),
                      "closed-form V, E0 at the system's b = tabulated V, E0", tol);
  s.detail = "V coefficient " + fmt_g(form.V_coefficient, 17) + " (power " +
             std::to_string(form.V_power) + "), E0 " + fmt_g(form.E0, 17);
  return s;
}

ResidualStats decomposition_check(const PhysicalConstants& c) {
  int mismatches = 0;
  std::string detail;
  auto expect = [&](bool ok, const std::string& what) {
    if (!ok) {
      ++mismatches;
      detail += "mismatch: " + what + "; ";
    }
  };
  const auto one = decompose_lambda(Rational(1), 1.0, c);
  expect(one.separable, "lambda=1 separable");
  if (one.separable) {
    expect(one.V_form->factor == Rational(-1) && one.V_form->b_power == Rational(1) &&
               one.V_form->r_power == Rational(-1),
           "lambda=1 V = -hbar^2/(mu b r)");
    expect(one.E0_form->factor == Rational(-1, 2) && one.E0_form->b_power == Rational(2),
           "lambda=1 E0 = -hbar^2/(2 mu b^2)");
  }
  const auto two = decompose_lambda(Rational(2), 1.0, c);
  expect(two.separable, "lambda=2 separable");
  if (two.separable) {
    expect(two.V_form->factor == Rational(2) && two.V_form->b_power == Rational(4) &&
               two.V_form->r_power == Rational(2),
           "lambda=2 V = 2 hbar^2 r^2/(mu b^4)");
    expect(two.E0_form->factor == Rational(3) && two.E0_form->b_power == Rational(2),
           "lambda=2 E0 = 3 hbar^2/(mu b^2)");
  }
  for (const Rational lam : {Rational(1, 2), Rational(3, 2), Rational(3)}) {
    expect(!decompose_lambda(lam, 1.0, c).separable, "lambda=" + lam.str() + " non-separable");
  }
  ResidualAccumulator acc;
  acc.add(static_cast<double>(mismatches), 1.0);
  auto s = acc.finish("decomposition", "exact rational coefficients of the lambda monomials", 0.0,
                      Criterion::kAbsolute);
  s.detail = mismatches == 0
                 ? "lambda=1: V=-1*hbar^2/(mu b) r^-1, E0=-1/2*hbar^2/(mu b^2); "
                   "lambda=2: V=2*hbar^2/(mu b^4) r^2, E0=3*hbar^2/(mu b^2); "
                   "lambda in {1/2, 3/2, 3} non-separable"
                 : detail;
  return s;
}

GroundStateReport ground_state_condition(const Eigenstate& state, const SampleCloud& cloud,
                                         double tol) {
  if (!state.is_ground()) {
    throw Error(ErrorKind::kInvalidState, "ground_state_condition needs a ground state, got " +
                                              label(state.system, state.qn));
  }
  const auto field = make_field(state);
  const auto p = MapParams::for_state(state);
  const double L = state.length_scale();
  const double hbar = state.scales.constants.hbar;
  ResidualAccumulator dz_acc;
  ResidualAccumulator s_acc;
  sweep(cloud, dz_acc, [&](const SamplePoint& pt) {
    const auto jet = field(pt.x, pt.t);
    double worst = 0.0;
    for (int i = 0; i < 3; ++i) {
      worst = std::max(worst, std::abs(dz_apply(field, pt.x, pt.t, i, Branch::kDirect, p)));
    }
    dz_acc.add(worst, std::abs(jet.psi) / L, std::abs(jet.psi));
    const cplx s_res = cplx(0.0, hbar) * jet.dt - state.energy * jet.psi;
    s_acc.add(std::abs(s_res), std::abs(state.energy * jet.psi), std::abs(jet.psi));
  });
  GroundStateReport rep;
  rep.dz = dz_acc.finish(name_for("ground_state_dz", state), "d psi0 / d z_i = 0", tol);
  rep.s_equation = s_acc.finish(name_for("ground_state_s", state),
                                "i hbar d psi0 / d s = E psi0", tol);
  return rep;
}

FieldHandle oscillator_axis_state(const DerivedScales& oscillator, int axis) {
  if (oscillator.system != System::kOscillator) {
    throw Error(ErrorKind::kInvalidInput, "axis states are oscillator states");
  }
  if (axis < 0 || axis > 2) throw Error(ErrorKind::kInvalidInput, "axis must be 0, 1 or 2");
  const auto minus = oscillator_state(oscillator, {0, 1, -1});
  const auto plus = oscillator_state(oscillator, {0, 1, 1});
  const auto zero = oscillator_state(oscillator, {0, 1, 0});
  const double s = 1.0 / std::numbers::sqrt2;
  cplx cm;
  cplx cp;
  cplx c0;
  if (axis == 0) {
    cm = s;
    cp = -s;
  } else if (axis == 1) {
    cm = cplx(0.0, s);
    cp = cplx(0.0, s);
  } else {
    c0 = 1.0;
  }
  FieldHandle f;
  f.eval = [=](const Vec3& x, double t) {
    AmplitudeJet out{};
    auto accumulate = [&](const Eigenstate& st, cplx w) {
      if (w == cplx{}) return;
      const auto j = evaluate(st, x, t);
      out.psi += w * j.psi;
      for (int i = 0; i < 3; ++i) out.grad[i] += w * j.grad[i];
      out.laplacian += w * j.laplacian;
      out.dt += w * j.dt;
    };
    accumulate(minus, cm);
    accumulate(plus, cp);
    accumulate(zero, c0);
    return out;
  };
  f.energy = zero.energy;
  f.hbar = oscillator.constants.hbar;
  f.length_scale = oscillator.b;
  f.name = std::string("HO axis ") + "xyz"[axis];
  return f;
}

ResidualStats ladder_lowering(const Eigenstate& ground, const SampleCloud& cloud, double tol) {
  if (ground.system != System::kOscillator || !ground.is_ground()) {
    throw Error(ErrorKind::kInvalidState, "ladder checks need the oscillator ground state");
  }
  const auto field = make_field(ground);
  const auto p = MapParams::for_state(ground);
  ResidualAccumulator acc;
  sweep(cloud, acc, [&](const SamplePoint& pt) {
    const cplx psi = field(pt.x, pt.t).psi;
    double worst = 0.0;
    for (int i = 0; i < 3; ++i) {
      worst = std::max(worst, std::abs(ladder_apply(field, pt.x, pt.t, i, LadderKind::kLower, p)));
    }
    acc.add(worst, std::abs(psi), std::abs(psi));
  });
  return acc.finish("ladder_lowering", "a_i psi0 = 0", tol);
}

namespace {

// Spread of complex ratios relative to the ratio at the largest-magnitude point.
ResidualStats ratio_spread(const std::vector<cplx>& ratios, const std::vector<double>& magnitudes,
                           std::size_t skipped, std::string name, std::string eq_ref, double tol) {
  std::size_t anchor = 0;
  for (std::size_t k = 0; k < magnitudes.size(); ++k) {
    if (magnitudes[k] > magnitudes[anchor]) anchor = k;
  }
  ResidualAccumulator acc;
  cplx mean{};
  for (std::size_t k = 0; k < ratios.size(); ++k) {
    acc.add(std::abs(ratios[k] - ratios[anchor]), std::abs(ratios[anchor]), magnitudes[k]);
    mean += ratios[k];
  }
  for (std::size_t k = 0; k < skipped; ++k) acc.skip();
  auto s = acc.finish(std::move(name), std::move(eq_ref), tol);
  if (!ratios.empty()) {
    mean /= static_cast<double>(ratios.size());
    s.detail = "ratio = " + fmt_g(mean.real(), 15) + (mean.imag() < 0 ? "" : "+") +
               fmt_g(mean.imag(), 15) + "i";
  }
  return s;
}

}  // namespace

ResidualStats ladder_raising(const Eigenstate& ground, int axis, const SampleCloud& cloud,
                             double tol) {
  if (ground.system != System::kOscillator || !ground.is_ground()) {
    throw Error(ErrorKind::kInvalidState, "ladder checks need the oscillator ground state");
  }
  const auto field = make_field(ground);
  const auto excited = oscillator_axis_state(ground.scales, axis);
  const auto p = MapParams::for_state(ground);
  const double hbar = ground.scales.constants.hbar;
  std::vector<cplx> ratios;
  std::vector<double> magnitudes;
  std::size_t skipped = 0;
  for (const auto& pt : cloud.points) {
    try {
      const cplx raised = ladder_apply(field, pt.x, pt.t, axis, LadderKind::kRaise, p);
      const cplx target = excited(pt.x, pt.t).psi;
      const cplx phase = std::polar(1.0, (ground.energy - *excited.energy) * pt.t / hbar);
      ratios.push_back(raised / target * phase);
      magnitudes.push_back(std::abs(target));
    } catch (const Error& e) {
      if (!is_guard(e)) throw;
      ++skipped;
    }
  }
  return ratio_spread(ratios, magnitudes, skipped,
                      std::string("ladder_raising/axis=") + "xyz"[axis],
                      "a_i^dagger psi0 proportional to the axis-i first excited state", tol);
}

ResidualStats ladder_commutator_check(const Eigenstate& ground, int axis,
                                      const SampleCloud& cloud, double tol) {
  if (ground.system != System::kOscillator || !ground.is_ground()) {
    throw Error(ErrorKind::kInvalidState, "ladder checks need the oscillator ground state");
  }
  const auto field = make_field(ground);
  const auto p = MapParams::for_state(ground);
  const double h = 1e-4 * ground.length_scale();
  std::vector<cplx> ratios;
  std::vector<double> magnitudes;
  std::size_t skipped = 0;
  for (const auto& pt : cloud.points) {
    try {
      const cplx psi = field(pt.x, pt.t).psi;
      ratios.push_back(ladder_commutator(field, pt.x, pt.t, axis, p, h) / psi);
      magnitudes.push_back(std::abs(psi));
    } catch (const Error& e) {
      if (!is_guard(e)) throw;
      ++skipped;
    }
  }
  return ratio_spread(ratios, magnitudes, skipped,
                      std::string("ladder_commutator/axis=") + "xyz"[axis],
                      "[a_i, a_i^dagger] psi0 = c psi0 with c constant", tol);
}

ResidualStats map_roundtrip(double lambda, double b, double energy, double hbar, std::size_t count,
                            std::uint64_t seed, double tol) {
  const CounterRng rng(seed, 0x6d6170ULL + static_cast<std::uint64_t>(lambda * 16.0));
  ResidualAccumulator acc;
  std::uint64_t ctr = 0;
  for (std::size_t k = 0; k < count; ++k) {
    MapParams p;
    p.lambda = lambda;
    p.hbar = hbar;
    p.energy = energy * (0.5 + rng.uniform(ctr++));
    p.b = b * (0.5 + rng.uniform(ctr++));
    const double r_span = 12.0 * b;
    const Vec3 x{r_span * (2.0 * rng.uniform(ctr) - 1.0), r_span * (2.0 * rng.uniform(ctr + 1) - 1.0),
                 r_span * (2.0 * rng.uniform(ctr + 2) - 1.0)};
    ctr += 3;
    const double t = 10.0 * hbar / std::abs(energy) * (2.0 * rng.uniform(ctr++) - 1.0);
    for (const Branch branch : {Branch::kDirect, Branch::kConjugate}) {
      const auto ev = map_forward(x, t, p, branch);
      const auto back = map_inverse(ev, p);
      const double dx = norm(Vec3{back.x[0] - x[0], back.x[1] - x[1], back.x[2] - x[2]});
      const double dt = std::abs(back.t - t) / std::max(1.0, std::abs(t));
      acc.add(std::max(dx, dt), 1.0);
    }
  }
  return acc.finish("map_roundtrip/lambda=" + fmt_g(lambda),
                    "map_inverse(map_forward(x, t)) = (x, t) on both branches", tol,
                    Criterion::kAbsolute);
}

HolomorphyReport holomorphy_check(const DerivedScales& hydrogen, int n_max, std::size_t count,
                                  std::uint64_t seed, double fd_step, double fd_tol) {
  const CounterRng rng(seed, 0x686f6c6fULL);
  const double a0 = *hydrogen.alpha0;
  const double hbar = hydrogen.constants.hbar;
  ResidualAccumulator analytic;
  ResidualAccumulator radial_form;
  ResidualAccumulator fd;
  for (std::size_t k = 0; k < count; ++k) {
    const int n = 1 + static_cast<int>(k % static_cast<std::size_t>(std::max(1, n_max)));
    MapParams p;
    p.energy = hydrogen.energy_level(n);
    p.b = a0;
    p.lambda = 1.0;
    p.hbar = hbar;
    const double r = (0.05 + (12.0 - 0.05) * rng.uniform(2 * k)) * n * a0;
    const double t = 2.0 * std::numbers::pi * hbar / std::abs(p.energy) * rng.uniform(2 * k + 1);
    const auto res = cr_residual(p, r, t, fd_step);
    const double scale = (p.energy / hbar) * (p.energy / hbar) * res.tau_magnitude;
    analytic.add(std::max({res.second_order_ty, res.first_order_a, res.first_order_b}), scale);
    radial_form.add(res.second_order_tr, scale);
    fd.add(res.fd_second_order, scale);
  }
  HolomorphyReport rep;
  rep.analytic = analytic.finish("holomorphy/analytic",
                                 "g_t = h_y, g_y = -h_t and tau_tt + tau_yy = 0 for tau = exp(-iEs/hbar)",
                                 0.0, Criterion::kAbsolute);
  rep.radial_form = radial_form.finish("holomorphy/radial_form",
                                       "tau_tt + (a0^2 E^2/hbar^2) tau_rr = 0 (chain rule)", 1e-14);
  rep.finite_difference = fd.finish("holomorphy/finite_difference",
                                    "tau_tt + (a0^2 E^2/hbar^2) tau_rr = 0 (central differences)",
                                    fd_tol);
  return rep;
}

ResidualStats coordinate_independence_check(const MapParams& p, double length_scale,
                                            std::size_t count, std::uint64_t seed, double tol) {
  CloudSpec spec;
  spec.count = count;
  spec.seed = seed;
  spec.stream = 0x636f6f72ULL + static_cast<std::uint64_t>(p.lambda * 16.0);
  spec.r_min = 0.05 * length_scale;
  spec.r_max = 12.0 * length_scale;
  spec.axis_margin = 0.0;
  spec.t_max = 1.0;
  const auto cloud = make_cloud(spec);
  ResidualAccumulator acc;
  for (const auto& pt : cloud.points) {
    const auto d = coordinate_independence(pt.x, p);
    const Vec3 g = gauge_vector(pt.x, p);
    const double ref = std::abs(p.hbar / p.energy) * std::max({std::abs(g[0]), std::abs(g[1]), std::abs(g[2])});
    acc.add(std::max({d[0], d[1], d[2], d[3]}), ref);
  }
  return acc.finish("coordinate_independence/lambda=" + fmt_g(p.lambda),
                    "dz_i/ds = ds/dz_i = dz_i*/ds* = ds*/dz_i* = 0", tol);
}

ResidualStats convention_adjudication(const DerivedScales& hydrogen, int n_max, double tol) {
  ResidualAccumulator acc;
  std::string agree;
  std::string differ;
  for (int n = 1; n <= n_max; ++n) {
    for (int l = 0; l < n; ++l) {
      const auto state = hydrogen_state(hydrogen, {n, l, 0});
      const double transcribed = cnl_transcribed(hydrogen, n, l);
      const double ratio = state.radial_norm / transcribed;
      const double convention_factor = factorial(n + l);
      const double dev_same = std::abs(ratio - 1.0);
      const double dev_factor = std::abs(ratio / convention_factor - 1.0);
      const std::string entry = "(" + std::to_string(n) + "," + std::to_string(l) + "):" + fmt_g(ratio);
      if (dev_same <= tol) {
        agree += entry + " ";
        acc.add(dev_same, 1.0);
      } else {
        differ += entry + " ";
        acc.add(dev_factor, 1.0);
      }
    }
  }
  auto s = acc.finish("convention_adjudication",
                      "numeric radial norm vs transcribed C_nl = (1/a0)^{3/2}(2/n^2)sqrt((n-l-1)!/((n+l)!)^3)",
                      tol, Criterion::kAbsolute);
  s.detail = "radial_norm/C_nl ratios; equal to 1: " + (agree.empty() ? std::string("none ") : agree) +
             "| equal to (n+l)! (old-convention Laguerre factor): " +
             (differ.empty() ? std::string("none") : differ);
  return s;
}

ResidualStats radial_norm_textbook(const DerivedScales& hydrogen, int n_max, double tol) {
  ResidualAccumulator acc;
  for (int n = 1; n <= n_max; ++n) {
    for (int l = 0; l < n; ++l) {
      const auto state = hydrogen_state(hydrogen, {n, l, 0});
      const double expected = cnl_standard(hydrogen, n, l);
      acc.add(std::abs(state.radial_norm - expected), expected);
    }
  }
  return acc.finish("radial_norm_textbook",
                    "numeric radial norm = sqrt((2/(n a0))^3 (n-l-1)!/(2n (n+l)!))", tol);
}

ResidualStats transformed_ground_radial(const DerivedScales& hydrogen, double tol) {
  const auto state = hydrogen_state(hydrogen, {1, 0, 0});
  const double a0 = *hydrogen.alpha0;
  const double expected = 2.0 * std::pow(a0, -1.5);
  ResidualAccumulator acc;
  const int grid = 200;
  for (int i = 0; i < grid; ++i) {
    const double r = (0.01 + (12.0 - 0.01) * i / (grid - 1.0)) * a0;
    acc.add(std::abs(transformed_radial(state, r) - expected), expected);
  }
  return acc.finish("transformed_radial_ground", "R~_10(r) = 2 a0^{-3/2}", tol);
}

}  // namespace cqm
