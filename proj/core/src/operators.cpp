#include "cqm/operators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "cqm/error.hpp"

namespace cqm {

namespace {

void check_axis(int axis) {
  if (axis < 0 || axis > 2) throw Error(ErrorKind::kInvalidInput, "axis must be 0, 1 or 2");
}

void check_step(double h, const Vec3& x) {
  const double floor = 1e3 * std::numeric_limits<double>::epsilon() * norm(x);
  if (!(h > 0.0) || !(h >= floor) || !std::isfinite(h)) throw Error(ErrorKind::kStep, "finite-difference step underflow");
}

Vec3 shifted(Vec3 x, int axis, double d) {
  x[axis] += d;
  return x;
}

// Weighted stencil sums for first and second derivatives.
cplx first_derivative(const std::function<cplx(double)>& g, double h, FdOrder order) {
  if (order == FdOrder::kSecond) return (g(h) - g(-h)) / (2.0 * h);
  return (-g(2.0 * h) + 8.0 * g(h) - 8.0 * g(-h) + g(-2.0 * h)) / (12.0 * h);
}

cplx second_derivative(const std::function<cplx(double)>& g, cplx centre, double h,
                       FdOrder order) {
  if (order == FdOrder::kSecond) return (g(h) - 2.0 * centre + g(-h)) / (h * h);
  return (-g(2.0 * h) + 16.0 * g(h) - 30.0 * centre + 16.0 * g(-h) - g(-2.0 * h)) /
         (12.0 * h * h);
}

double richardson_factor(FdOrder order) {
  return order == FdOrder::kSecond ? 4.0 : 16.0;
}

}  // namespace

FieldHandle make_field(const Eigenstate& state) {
  FieldHandle f;
  f.eval = [state](const Vec3& x, double t) { return evaluate(state, x, t); };
  f.energy = state.energy;
  f.hbar = state.scales.constants.hbar;
  f.length_scale = state.length_scale();
  f.name = label(state.system, state.qn);

  const double a = state.length_scale();
  const auto jet = f.eval(Vec3{0.61 * a, 0.37 * a, 0.52 * a}, 0.3 * f.hbar / std::abs(state.energy));
  const cplx expected = cplx(0.0, -state.energy / f.hbar) * jet.psi;
  if (std::abs(jet.dt - expected) > 1e-13 * std::max(std::abs(expected), 1e-300)) {
    throw Error(ErrorKind::kInvalidState, "field jet violates dt = -iE/hbar psi");
  }
  return f;
}

FieldHandle constant_field(cplx value, double hbar) {
  FieldHandle f;
  f.eval = [value](const Vec3&, double) {
    AmplitudeJet j;
    j.psi = value;
    j.grad = {cplx{}, cplx{}, cplx{}};
    j.laplacian = cplx{};
    j.dt = cplx{};
    return j;
  };
  f.hbar = hbar;
  f.name = "constant";
  return f;
}

void OperatorSpec::validate() const {
  check_axis(axis);
  map.validate();
  if ((kind == OperatorKind::kLadderLower || kind == OperatorKind::kLadderRaise) &&
      map.lambda != 2.0) {
    throw Error(ErrorKind::kUnsupported, "ladder operators require lambda = 2");
  }
}

Vec3 gauge_vector(const Vec3& x, const MapParams& p) {
  const double r = norm(x);
  const double c = p.lambda * std::pow(r, p.lambda - 2.0) * std::pow(p.b, -p.lambda);
  return {c * x[0], c * x[1], c * x[2]};
}

double gauge_divergence(const Vec3& x, const MapParams& p) {
  const double r = norm(x);
  return p.lambda * (p.lambda + 1.0) * std::pow(r, p.lambda - 2.0) * std::pow(p.b, -p.lambda);
}

cplx dz_apply(const FieldHandle& f, const Vec3& x, double t, int axis, Branch branch,
              const MapParams& p) {
  check_axis(axis);
  p.validate();
  const auto jet = f(x, t);
  const double g = gauge_vector(x, p)[axis];
  return branch == Branch::kDirect ? jet.grad[axis] + g * jet.psi : jet.grad[axis] - g * jet.psi;
}

cplx dz_apply_chain_rule(const FieldHandle& f, const Vec3& x, double t, int axis, Branch branch,
                         const MapParams& p) {
  check_axis(axis);
  p.validate();
  const auto jet = f(x, t);
  const double g = gauge_vector(x, p)[axis];
  const cplx coupling(0.0, (p.hbar / p.energy) * g);
  return branch == Branch::kDirect ? jet.grad[axis] + coupling * jet.dt
                                   : jet.grad[axis] - coupling * jet.dt;
}

cplx dzdz_analytic(const FieldHandle& f, const Vec3& x, double t, const MapParams& p) {
  p.validate();
  const auto jet = f(x, t);
  const Vec3 g = gauge_vector(x, p);
  const double g2 = g[0] * g[0] + g[1] * g[1] + g[2] * g[2];
  return jet.laplacian + (gauge_divergence(x, p) - g2) * jet.psi;
}

MixedDerivative dzdz_apply(const FieldHandle& f, const Vec3& x, double t, const MapParams& p,
                           double fd_step) {
  check_step(fd_step, x);
  MixedDerivative out;
  out.analytic = dzdz_analytic(f, x, t, p);
  cplx nested{};
  for (int i = 0; i < 3; ++i) {
    auto inner = [&](const Vec3& y) { return dz_apply(f, y, t, i, Branch::kDirect, p); };
    const cplx d_inner = fd_partial(inner, x, i, fd_step, FdOrder::kFourth);
    nested += d_inner - gauge_vector(x, p)[i] * inner(x);
  }
  out.nested_fd = nested;
  return out;
}

cplx ladder_apply(const FieldHandle& f, const Vec3& x, double t, int axis, LadderKind kind,
                  const MapParams& p) {
  if (p.lambda != 2.0) throw Error(ErrorKind::kUnsupported, "ladder operators require lambda = 2");
  if (kind == LadderKind::kLower) return 0.5 * p.b * dz_apply(f, x, t, axis, Branch::kDirect, p);
  return -0.5 * p.b * dz_apply(f, x, t, axis, Branch::kConjugate, p);
}

cplx ladder_commutator(const FieldHandle& f, const Vec3& x, double t, int axis,
                       const MapParams& p, double fd_step) {
  if (p.lambda != 2.0) throw Error(ErrorKind::kUnsupported, "ladder operators require lambda = 2");
  check_step(fd_step, x);
  // a (a^+ f) - a^+ (a f) = (b/2) [ d_i (a^+ f + a f) + g_i (a^+ f - a f) ]
  auto raised = [&](const Vec3& y) { return ladder_apply(f, y, t, axis, LadderKind::kRaise, p); };
  auto lowered = [&](const Vec3& y) { return ladder_apply(f, y, t, axis, LadderKind::kLower, p); };
  auto sum = [&](const Vec3& y) { return raised(y) + lowered(y); };
  const cplx d_sum = fd_partial(sum, x, axis, fd_step, FdOrder::kFourth);
  const double g = gauge_vector(x, p)[axis];
  return 0.5 * p.b * (d_sum + g * (raised(x) - lowered(x)));
}

cplx fd_partial(const std::function<cplx(const Vec3&)>& g, const Vec3& x, int axis, double h,
                FdOrder order) {
  check_axis(axis);
  check_step(h, x);
  return first_derivative([&](double d) { return g(shifted(x, axis, d)); }, h, order);
}

CVec3 fd_gradient(const FieldHandle& f, const Vec3& x, double t, double h, FdOrder order,
                  bool richardson) {
  check_step(h, x);
  CVec3 out{};
  for (int i = 0; i < 3; ++i) {
    auto g = [&](double d) { return f(shifted(x, i, d), t).psi; };
    const cplx coarse = first_derivative(g, h, order);
    if (!richardson) {
      out[i] = coarse;
      continue;
    }
    const cplx fine = first_derivative(g, 0.5 * h, order);
    const double k = richardson_factor(order);
    out[i] = (k * fine - coarse) / (k - 1.0);
  }
  return out;
}

cplx fd_laplacian(const FieldHandle& f, const Vec3& x, double t, double h, FdOrder order,
                  bool richardson) {
  check_step(h, x);
  const cplx centre = f(x, t).psi;
  cplx coarse{};
  cplx fine{};
  for (int i = 0; i < 3; ++i) {
    auto g = [&](double d) { return f(shifted(x, i, d), t).psi; };
    coarse += second_derivative(g, centre, h, order);
    if (richardson) fine += second_derivative(g, centre, 0.5 * h, order);
  }
  if (!richardson) return coarse;
  const double k = richardson_factor(order);
  return (k * fine - coarse) / (k - 1.0);
}

}  // namespace cqm
