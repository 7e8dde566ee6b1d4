#include "cqm/suite.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "cqm/error.hpp"

namespace cqm {

namespace {

class Runner {
 public:
  explicit Runner(VerificationReport& report) : report_(report) {}

  void one(const std::string& name, const std::function<ResidualStats()>& fn) {
    try {
      report_.checks.push_back(fn());
    } catch (const std::exception& e) {
      failed(name, e.what());
    }
  }

  void many(const std::string& name, const std::function<std::vector<ResidualStats>()>& fn) {
    try {
      for (auto& s : fn()) report_.checks.push_back(std::move(s));
    } catch (const std::exception& e) {
      failed(name, e.what());
    }
  }

 private:
  void failed(const std::string& name, const std::string& message) {
    ResidualStats s;
    s.check_name = name;
    s.pass = false;
    s.max_abs = std::nan("");
    s.max_rel = std::nan("");
    s.mean_abs = std::nan("");
    s.detail = "error: " + message;
    report_.checks.push_back(std::move(s));
  }

  VerificationReport& report_;
};

Eigenstate perturbed(Eigenstate state, double energy_scale) {
  state.energy *= energy_scale;
  return state;
}

void state_checks(Runner& run, const DerivedScales& scales, const QuantumNumbers& qn,
                  const SuiteConfig& cfg) {
  const std::string tag = "/" + label(scales.system, qn);
  Eigenstate state;
  try {
    state = perturbed(make_state(scales, qn), cfg.energy_scale);
  } catch (const std::exception& e) {
    run.one("state" + tag, [&]() -> ResidualStats { throw Error(ErrorKind::kInvalidQuantumNumbers, e.what()); });
    return;
  }
  const auto cloud = cloud_for(state, cfg.n_points, cfg.seed);
  const bool ground = state.is_ground();
  const double tol_transformed = ground ? std::min(cfg.tol_analytic, 1e-12) : cfg.tol_analytic;

  run.one("schrodinger" + tag, [&] { return residual_schrodinger(state, cloud, cfg.tol_analytic); });
  run.one("transformed_schrodinger" + tag,
          [&] { return residual_transformed(state, cloud, tol_transformed); });
  if (state.system == System::kHydrogen) {
    run.one("operator_identity" + tag,
            [&] { return residual_operator_identity(state, cloud, cfg.tol_analytic); });
  }
  run.one("transformed_wavefunction" + tag, [&] {
    const auto small = cloud_for(state, std::min<std::size_t>(50, cfg.n_points), cfg.seed);
    return transformed_consistency(state, small);
  });
  run.one("normalization" + tag, [&] { return normalization_stats(state); });
  run.one("jet_fd_gradient" + tag, [&] { return jet_fd_gradient(state, cloud, cfg.tol_fd); });
  run.one("jet_fd_laplacian" + tag, [&] { return jet_fd_laplacian(state, cloud, cfg.tol_fd); });
  run.one("dzdz_nested_fd" + tag, [&] { return dzdz_cross_check(state, cloud, cfg.tol_fd); });
  if (ground) {
    run.many("ground_state" + tag, [&] {
      auto rep = ground_state_condition(state, cloud);
      return std::vector<ResidualStats>{rep.dz, rep.s_equation};
    });
  }
}

}  // namespace

SuiteConfig SuiteConfig::defaults() {
  SuiteConfig cfg;
  cfg.hydrogen_states = hydrogen_states_up_to(3);
  cfg.oscillator_states = {{0, 0, 0}, {1, 0, 0}, {0, 2, 1}};
  return cfg;
}

std::vector<QuantumNumbers> hydrogen_states_up_to(int n_max) {
  std::vector<QuantumNumbers> out;
  for (int n = 1; n <= n_max; ++n) {
    for (int l = 0; l < n; ++l) {
      for (int k = -l; k <= l; ++k) out.push_back({n, l, k});
    }
  }
  return out;
}

VerificationReport run_suite(const SuiteConfig& cfg) {
  VerificationReport report;
  report.units = cfg.units_label;
  report.seed = cfg.seed;
  if (cfg.hydrogen_states.empty() && cfg.oscillator_states.empty()) {
    report.no_checks = true;
    report.overall_pass = false;
    return report;
  }
  Runner run(report);
  const auto& c = cfg.constants;
  const bool has_h = !cfg.hydrogen_states.empty();
  const bool has_ho = !cfg.oscillator_states.empty();

  std::optional<DerivedScales> h_scales;
  std::optional<DerivedScales> ho_scales;
  if (has_h) {
    run.many("scales/hydrogen", [&] {
      h_scales = derive_scales(c, System::kHydrogen);
      return std::vector<ResidualStats>{};
    });
  }
  if (has_ho) {
    run.many("scales/oscillator", [&] {
      ho_scales = derive_scales(c, System::kOscillator);
      return std::vector<ResidualStats>{};
    });
  }

  if (h_scales) {
    for (const auto& qn : cfg.hydrogen_states) state_checks(run, *h_scales, qn, cfg);
  }
  if (ho_scales) {
    for (const auto& qn : cfg.oscillator_states) state_checks(run, *ho_scales, qn, cfg);
  }

  if (h_scales) {
    const auto& s = *h_scales;
    run.one("map_roundtrip/lambda=1",
            [&] { return map_roundtrip(1.0, s.b, s.E_ground, c.hbar, cfg.n_points, cfg.seed); });
    run.many("holomorphy", [&] {
      int n_max = 1;
      for (const auto& qn : cfg.hydrogen_states) n_max = std::max(n_max, qn.n);
      auto rep = holomorphy_check(s, n_max, cfg.n_points, cfg.seed, 1e-3, 1e-6);
      return std::vector<ResidualStats>{rep.analytic, rep.radial_form, rep.finite_difference};
    });
    run.one("coordinate_independence/lambda=1", [&] {
      MapParams p{s.E_ground, s.b, 1.0, c.hbar};
      return coordinate_independence_check(p, s.b, 100, cfg.seed);
    });
    run.one("ev_relation/lambda=1", [&] {
      CloudSpec spec;
      spec.count = cfg.n_points;
      spec.seed = cfg.seed;
      spec.stream = 0x6576ULL + 1;
      spec.r_min = 0.05 * s.b;
      spec.r_max = 12.0 * s.b;
      return check_ev_relation(1.0, s.b, c, make_cloud(spec));
    });
    run.one("table_crosscheck/hydrogen", [&] { return table_crosscheck(System::kHydrogen, c); });
  }
  if (ho_scales) {
    const auto& s = *ho_scales;
    run.one("map_roundtrip/lambda=2",
            [&] { return map_roundtrip(2.0, s.b, s.E_ground, c.hbar, cfg.n_points, cfg.seed); });
    run.one("coordinate_independence/lambda=2", [&] {
      MapParams p{s.E_ground, s.b, 2.0, c.hbar};
      return coordinate_independence_check(p, s.b, 100, cfg.seed);
    });
    run.one("ev_relation/lambda=2", [&] {
      CloudSpec spec;
      spec.count = cfg.n_points;
      spec.seed = cfg.seed;
      spec.stream = 0x6576ULL + 2;
      spec.r_min = 0.05 * s.b;
      spec.r_max = 4.0 * s.b;
      return check_ev_relation(2.0, s.b, c, make_cloud(spec));
    });
    run.one("table_crosscheck/oscillator", [&] { return table_crosscheck(System::kOscillator, c); });
  }
  run.one("decomposition", [&] { return decomposition_check(c); });

  if (ho_scales) {
    const auto& s = *ho_scales;
    run.many("ladder", [&] {
      const auto ground = oscillator_state(s, {0, 0, 0});
      const auto cloud = cloud_for(ground, cfg.n_points, cfg.seed);
      std::vector<ResidualStats> out{ladder_lowering(ground, cloud)};
      for (int axis = 0; axis < 3; ++axis) out.push_back(ladder_raising(ground, axis, cloud));
      for (int axis = 0; axis < 3; ++axis) {
        out.push_back(ladder_commutator_check(ground, axis, cloud));
      }
      return out;
    });
  }
  if (h_scales) {
    int n_max = 1;
    for (const auto& qn : cfg.hydrogen_states) n_max = std::max(n_max, qn.n);
    run.one("convention_adjudication", [&] { return convention_adjudication(*h_scales, n_max); });
    run.one("radial_norm_textbook", [&] { return radial_norm_textbook(*h_scales, n_max); });
    run.one("transformed_radial_ground", [&] { return transformed_ground_radial(*h_scales); });
  }

  report.no_checks = report.checks.empty();
  report.overall_pass = !report.no_checks &&
                        std::all_of(report.checks.begin(), report.checks.end(),
                                    [](const ResidualStats& s) { return s.pass; });
  return report;
}

}  // namespace cqm
