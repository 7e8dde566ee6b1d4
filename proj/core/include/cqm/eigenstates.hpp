#pragma once

#include <string>

#include "cqm/quadrature.hpp"
#include "cqm/types.hpp"
#include "cqm/units.hpp"

namespace cqm {

// Hydrogen: n is the principal number. Oscillator: n is the radial number n_r.
struct QuantumNumbers {
  int n = 1;
  int l = 0;
  int k = 0;

  friend bool operator==(const QuantumNumbers&, const QuantumNumbers&) = default;
};

void validate_quantum_numbers(System system, const QuantumNumbers& qn);

std::string label(System system, const QuantumNumbers& qn);

struct AmplitudeJet {
  cplx psi;
  CVec3 grad;      // d psi / d x_i
  cplx laplacian;
  cplx dt;         // d psi / d t
};

// Radial function with its first two r-derivatives.
struct RadialJet {
  double value = 0.0;
  double d1 = 0.0;
  double d2 = 0.0;
};

struct Eigenstate {
  System system = System::kHydrogen;
  QuantumNumbers qn;
  double energy = 0.0;
  DerivedScales scales;
  double radial_norm = 1.0;  // fixed by quadrature at construction

  bool is_ground() const {
    return qn.l == 0 && qn.k == 0 && qn.n == (system == System::kHydrogen ? 1 : 0);
  }
  double length_scale() const { return scales.length_scale(); }
  double r_min() const { return 1e-8 * length_scale(); }
};

Eigenstate hydrogen_state(const DerivedScales& scales, const QuantumNumbers& qn);
Eigenstate oscillator_state(const DerivedScales& scales, const QuantumNumbers& qn);
Eigenstate make_state(const DerivedScales& scales, const QuantumNumbers& qn);

// Unnormalized radial shape (radial_norm not applied) and its derivatives.
RadialJet radial_shape(const Eigenstate& state, double r);

// R(r) = radial_norm * shape.
RadialJet radial(const Eigenstate& state, double r);

// psi, Cartesian gradient, Laplacian and time derivative at (x, t).
// Throws kSingularity for |x| <= r_min and kPoleProximity for l > 0 points
// within kPoleMargin of the z-axis.
AmplitudeJet evaluate(const Eigenstate& state, const Vec3& x, double t);

// Default radial domain: [r_min, 60 n alpha0] for hydrogen,
// [r_min, 10 b sqrt(2 n_r + l + 2)] for the oscillator.
QuadratureConfig default_quadrature(const Eigenstate& state);

// Returns the integral of |psi|^2 over space: refined radial quadrature times
// a Gauss-Legendre x trapezoid angular product rule.
double normalization_check(const Eigenstate& state, const QuadratureConfig& quad);

// Literal transcription of the published closed-form C_nl with 4 pi eps0
// absorbed: (1/alpha0)^{3/2} (2/n^2) sqrt((n-l-1)! / ((n+l)!)^3).
double cnl_transcribed(const DerivedScales& scales, int n, int l);

// Textbook normalization for NIST-convention Laguerre polynomials:
// sqrt((2/(n alpha0))^3 (n-l-1)! / (2n (n+l)!)).
double cnl_standard(const DerivedScales& scales, int n, int l);

// Sign changes of R(r) on a uniform grid of `samples` points in (0, r_max).
int count_radial_nodes(const Eigenstate& state, double r_max, int samples = 20000);

}  // namespace cqm
