#pragma once

#include <functional>
#include <optional>
#include <string>

#include "cqm/conformal.hpp"
#include "cqm/eigenstates.hpp"
#include "cqm/types.hpp"

namespace cqm {

// An evaluable field (x, t) -> jet. Eigenstate-backed fields carry their
// energy; generic test fields leave it empty.
struct FieldHandle {
  std::function<AmplitudeJet(const Vec3&, double)> eval;
  std::optional<double> energy;
  double hbar = 1.0;
  double length_scale = 1.0;
  std::string name;

  AmplitudeJet operator()(const Vec3& x, double t) const { return eval(x, t); }
};

// Wraps an eigenstate. Checks dt = -iE/hbar psi on a construction sample.
FieldHandle make_field(const Eigenstate& state);

// f(x, t) = value everywhere.
FieldHandle constant_field(cplx value, double hbar = 1.0);

enum class OperatorKind { kDz, kDzStar, kDzStarDz, kLadderLower, kLadderRaise, kLaplacian, kGradient };

struct OperatorSpec {
  OperatorKind kind = OperatorKind::kDz;
  int axis = 0;  // 0, 1, 2
  MapParams map;

  void validate() const;  // ladder kinds need lambda = 2
};

// b^{-lambda} d r^lambda / d x_i = lambda r^{lambda-2} x_i / b^lambda.
Vec3 gauge_vector(const Vec3& x, const MapParams& p);

// sum_i d/dx_i of the gauge vector: lambda (lambda + 1) r^{lambda-2} / b^lambda.
double gauge_divergence(const Vec3& x, const MapParams& p);

// d f / d z_i = d f/dx_i + g_i f (direct), d f/dx_i - g_i f (conjugate).
// This is the operator with i hbar d/dt already replaced by E.
cplx dz_apply(const FieldHandle& f, const Vec3& x, double t, int axis, Branch branch,
              const MapParams& p);

// The same derivative before the energy substitution:
// d f/dx_i +/- i (hbar/E) g_i d f/dt, with d f/dt from the jet.
cplx dz_apply_chain_rule(const FieldHandle& f, const Vec3& x, double t, int axis, Branch branch,
                         const MapParams& p);

struct MixedDerivative {
  cplx analytic;    // lap f + div(g) f - |g|^2 f
  cplx nested_fd;   // sum_i (d/dx_i - g_i) applied by central differences to dz_apply
};

cplx dzdz_analytic(const FieldHandle& f, const Vec3& x, double t, const MapParams& p);
MixedDerivative dzdz_apply(const FieldHandle& f, const Vec3& x, double t, const MapParams& p,
                           double fd_step);

enum class LadderKind { kLower, kRaise };

// a_i = (b/2) d/dz_i, a_i^dagger = -(b/2) d/dz_i*. Requires lambda = 2.
cplx ladder_apply(const FieldHandle& f, const Vec3& x, double t, int axis, LadderKind kind,
                  const MapParams& p);

// [a_i, a_i^dagger] f. The outer derivative acts on a_i^dagger f + a_i f by
// fourth-order central differences.
cplx ladder_commutator(const FieldHandle& f, const Vec3& x, double t, int axis,
                       const MapParams& p, double fd_step);

enum class FdOrder { kSecond = 2, kFourth = 4 };

// Central-difference gradient / Laplacian of f.psi. With richardson, the
// h and h/2 estimates are extrapolated. Throws kStep when h is below
// 1e3 * eps * |x|.
CVec3 fd_gradient(const FieldHandle& f, const Vec3& x, double t, double h, FdOrder order,
                  bool richardson = false);
cplx fd_laplacian(const FieldHandle& f, const Vec3& x, double t, double h, FdOrder order,
                  bool richardson = false);

// Generic central first derivative of a scalar complex function along axis.
cplx fd_partial(const std::function<cplx(const Vec3&)>& g, const Vec3& x, int axis, double h,
                FdOrder order);

}  // namespace cqm
