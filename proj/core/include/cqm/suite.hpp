#pragma once

#include <string>
#include <vector>

#include "cqm/units.hpp"
#include "cqm/verify.hpp"

namespace cqm {

struct SuiteConfig {
  PhysicalConstants constants = atomic_units();
  std::string units_label = "atomic";
  std::vector<QuantumNumbers> hydrogen_states;
  std::vector<QuantumNumbers> oscillator_states;
  std::size_t n_points = 200;
  std::uint64_t seed = 42;
  double tol_analytic = 1e-9;
  double tol_fd = 1e-5;
  // Multiplies every state energy before the residual checks. Test hook for
  // perturbation runs; 1 in normal use.
  double energy_scale = 1.0;

  // Hydrogen n <= 3 with all l, k; oscillator (0,0,0), (1,0,0), (0,2,1).
  static SuiteConfig defaults();
};

// All (n, l, k) with 1 <= n <= n_max.
std::vector<QuantumNumbers> hydrogen_states_up_to(int n_max);

struct VerificationReport {
  std::string suite = "conformal-qm";
  std::string units;
  std::uint64_t seed = 0;
  std::vector<ResidualStats> checks;
  bool overall_pass = false;
  bool no_checks = false;
};

// Runs every check in a fixed order. A check that throws is recorded as a
// failed entry carrying the error message; the suite keeps going.
VerificationReport run_suite(const SuiteConfig& config);

}  // namespace cqm
