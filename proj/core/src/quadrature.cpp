#include "cqm/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "cqm/error.hpp"

namespace cqm {

GaussLegendreRule gauss_legendre(int n) {
  if (n < 1) throw Error(ErrorKind::kInvalidInput, "Gauss-Legendre rule needs n >= 1");
  GaussLegendreRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p1 = 1.0;
      double p2 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = ((2.0 * j + 1.0) * z * p2 - j * p3) / (j + 1.0);
      }
      dp = n * (z * p1 - p2) / (z * z - 1.0);
      const double dz = p1 / dp;
      z -= dz;
      if (std::abs(dz) < 1e-16) break;
    }
    // recompute derivative at the converged root
    double p1 = 1.0;
    double p2 = 0.0;
    for (int j = 0; j < n; ++j) {
      const double p3 = p2;
      p2 = p1;
      p1 = ((2.0 * j + 1.0) * z * p2 - j * p3) / (j + 1.0);
    }
    dp = n * (z * p1 - p2) / (z * z - 1.0);
    const double w = 2.0 / ((1.0 - z * z) * dp * dp);
    rule.nodes[i] = -z;
    rule.nodes[n - 1 - i] = z;
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
  return rule;
}

double integrate_panels(const std::function<double(double)>& f, double a, double b, int panels,
                        const GaussLegendreRule& rule) {
  const double width = (b - a) / panels;
  double total = 0.0;
  for (int p = 0; p < panels; ++p) {
    const double lo = a + p * width;
    const double mid = lo + 0.5 * width;
    double sum = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      sum += rule.weights[i] * f(mid + 0.5 * width * rule.nodes[i]);
    }
    total += 0.5 * width * sum;
  }
  return total;
}

QuadratureResult integrate_refined(const std::function<double(double)>& f,
                                   const QuadratureConfig& cfg) {
  if (!(cfg.r_max > cfg.r_min)) throw Error(ErrorKind::kInvalidInput, "empty quadrature interval");
  const auto rule = gauss_legendre(cfg.points_per_panel);
  int panels = std::max(1, cfg.initial_panels);
  double previous = integrate_panels(f, cfg.r_min, cfg.r_max, panels, rule);
  while (panels < cfg.max_panels) {
    panels *= 2;
    const double current = integrate_panels(f, cfg.r_min, cfg.r_max, panels, rule);
    const double diff = std::abs(current - previous);
    if (diff <= cfg.tol * std::max(std::abs(current), 1e-300)) {
      return {current, diff, panels};
    }
    previous = current;
  }
  throw Error(ErrorKind::kQuadrature, "quadrature did not converge before max_panels");
}

}  // namespace cqm
