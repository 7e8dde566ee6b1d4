#pragma once

#include <functional>
#include <vector>

namespace cqm {

struct GaussLegendreRule {
  std::vector<double> nodes;    // on [-1, 1], ascending
  std::vector<double> weights;
};

// n-point Gauss-Legendre rule by Newton iteration on the Legendre recurrence.
GaussLegendreRule gauss_legendre(int n);

// Composite Gauss-Legendre over `panels` equal panels of [a, b].
double integrate_panels(const std::function<double(double)>& f, double a, double b, int panels,
                        const GaussLegendreRule& rule);

struct QuadratureConfig {
  double r_min = 0.0;
  double r_max = 1.0;
  int points_per_panel = 64;
  int initial_panels = 2;
  int max_panels = 1 << 12;
  double tol = 1e-11;  // relative agreement of successive refinements
};

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;  // |last - previous|
  int panels = 0;
};

// Doubles the panel count until two successive estimates agree to cfg.tol
// (relative). Throws kQuadrature when max_panels is reached first.
QuadratureResult integrate_refined(const std::function<double(double)>& f,
                                   const QuadratureConfig& cfg);

}  // namespace cqm
