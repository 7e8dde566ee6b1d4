#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "cqm/suite.hpp"
#include "cqm/verify.hpp"

using namespace cqm;

namespace {

int failures = 0;

void report(int id, bool pass, const std::string& what, const std::string& detail) {
  std::printf("%s [%d] %s: %s\n", pass ? "PASS" : "FAIL", id, what.c_str(), detail.c_str());
  if (!pass) ++failures;
}

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

struct Worst {
  double value = 0.0;
  std::string where;
  bool all_pass = true;

  void take(const ResidualStats& s, bool relative = true) {
    const double v = relative ? s.max_rel : s.max_abs;
    if (!(v <= value)) {
      value = v;
      where = s.check_name;
    }
    all_pass = all_pass && s.pass;
  }
  std::string str() const { return "worst " + sci(value) + " at " + where; }
};

}  // namespace

int main() {
  const auto c = atomic_units();
  const auto h = derive_scales(c, System::kHydrogen);
  const auto o = derive_scales(c, System::kOscillator);
  const std::size_t points = 200;
  const std::uint64_t seed = 42;

  std::vector<Eigenstate> states;
  for (const auto& qn : hydrogen_states_up_to(4)) states.push_back(hydrogen_state(h, qn));
  std::vector<SampleCloud> clouds;
  for (const auto& s : states) clouds.push_back(cloud_for(s, points, seed));

  // 1. Eigenpair validity.
  {
    const auto start = std::chrono::steady_clock::now();
    Worst w;
    for (std::size_t i = 0; i < states.size(); ++i) w.take(residual_schrodinger(states[i], clouds[i], 1e-9));
    const double elapsed = seconds_since(start);
    report(1, w.all_pass && w.value <= 1e-9 && elapsed < 10.0,
           "hydrogen eigenpairs n<=4 (" + std::to_string(states.size()) + " states), max_rel <= 1e-9, < 10 s",
           w.str() + ", " + sci(elapsed) + " s");
  }

  // 2. Operator identity.
  {
    Worst w;
    for (std::size_t i = 0; i < states.size(); ++i) {
      w.take(residual_operator_identity(states[i], clouds[i], 1e-9));
    }
    report(2, w.all_pass && w.value <= 1e-9, "operator identity, max_rel <= 1e-9", w.str());
  }

  // 3. Transformed equation.
  {
    Worst w;
    for (std::size_t i = 1; i < states.size(); ++i) w.take(residual_transformed(states[i], clouds[i], 1e-9));
    const auto ground = residual_transformed(states[0], clouds[0], 1e-12);
    report(3, w.all_pass && ground.pass,
           "transformed equation, max_rel <= 1e-9; ground state <= 1e-12 of |E0 psi|",
           w.str() + "; ground " + sci(ground.max_rel));
  }

  // 4. Transformed wavefunction consistency.
  {
    Worst w;
    for (const auto& s : states) w.take(transformed_consistency(s, cloud_for(s, 50, seed), 1e-12));
    const auto radial = transformed_ground_radial(h, 1e-12);
    report(4, w.all_pass && radial.pass,
           "psi(z,s) = psi(x,t) at 50 points per state <= 1e-12; R~_10 = 2 on a radial grid",
           w.str() + "; R~_10 max_rel " + sci(radial.max_rel));
  }

  // 5. Holomorphy.
  {
    const auto rep = holomorphy_check(h, 4, points, seed, 1e-3, 1e-6);
    report(5, rep.analytic.pass && rep.analytic.max_abs == 0.0 && rep.finite_difference.pass,
           "tau(s) Cauchy-Riemann: analytic residual exactly 0, finite differences <= 1e-6",
           "analytic max_abs " + sci(rep.analytic.max_abs) + ", fd max_rel " +
               sci(rep.finite_difference.max_rel));
  }

  // 6. Coordinate independence: absolute magnitudes of all four derivatives.
  {
    double worst = 0.0;
    for (const auto& p : {MapParams{h.E_ground, h.b, 1.0, c.hbar}, MapParams{o.E_ground, o.b, 2.0, c.hbar}}) {
      CloudSpec spec;
      spec.count = 100;
      spec.seed = seed;
      spec.r_min = 0.05 * p.b;
      spec.r_max = 12.0 * p.b;
      for (const auto& pt : make_cloud(spec).points) {
        for (double v : coordinate_independence(pt.x, p)) worst = std::max(worst, v);
      }
    }
    report(6, worst <= 1e-14, "coordinate independence at 100 points, lambda = 1 and 2, all four <= 1e-14",
           "max " + sci(worst));
  }

  // 7. EV relation and decomposition.
  {
    CloudSpec spec;
    spec.count = points;
    spec.seed = seed;
    spec.r_min = 0.05 * h.b;
    spec.r_max = 12.0 * h.b;
    const auto ev1 = check_ev_relation(1.0, h.b, c, make_cloud(spec), 1e-12);
    spec.r_min = 0.05 * o.b;
    spec.r_max = 4.0 * o.b;
    const auto ev2 = check_ev_relation(2.0, o.b, c, make_cloud(spec), 1e-12);
    const auto dec = decomposition_check(c);
    const auto th = table_crosscheck(System::kHydrogen, c);
    const auto to = table_crosscheck(System::kOscillator, c);
    report(7, ev1.pass && ev2.pass && dec.pass && th.pass && to.pass,
           "EV relation <= 1e-12 for lambda = 1, 2; exact decomposition; table values",
           "lambda=1 " + sci(ev1.max_rel) + ", lambda=2 " + sci(ev2.max_rel) + ", decomposition mismatches " +
               sci(dec.max_abs));
  }

  // 8. Ladder operators and the hydrogen ground-state condition.
  {
    const auto g = oscillator_state(o, {0, 0, 0});
    const auto cloud = cloud_for(g, points, seed);
    const auto low = ladder_lowering(g, cloud, 1e-12);
    Worst raise;
    for (int axis = 0; axis < 3; ++axis) raise.take(ladder_raising(g, axis, cloud, 1e-10));
    const auto hg = ground_state_condition(states[0], clouds[0], 1e-12);
    report(8, low.pass && raise.all_pass && hg.dz.pass,
           "a psi0 <= 1e-12; a^dagger psi0 ratio spread <= 1e-10; hydrogen dpsi0/dz <= 1e-12",
           "lowering " + sci(low.max_rel) + ", raising " + raise.str() + ", hydrogen dz " + sci(hg.dz.max_rel));
  }

  // 9. Normalization and the normalization-constant convention.
  {
    Worst w;
    for (const auto& s : states) w.take(normalization_stats(s, 1e-8), false);
    for (const auto& qn : SuiteConfig::defaults().oscillator_states) {
      w.take(normalization_stats(oscillator_state(o, qn), 1e-8), false);
    }
    const auto adj = convention_adjudication(h, 4, 1e-9);
    report(9, w.all_pass && adj.pass,
           "normalization within 1e-8; radial norm vs transcribed constant (ratio documented)",
           "normalization " + w.str() + "; " + adj.detail);
  }

  // 10. Reproducibility and runtime of the full default suite.
  {
    const auto start = std::chrono::steady_clock::now();
    std::ostringstream a_out, a_err, b_out, b_err;
    const int a = cli::run({"verify"}, a_out, a_err);
    const int b = cli::run({"verify"}, b_out, b_err);
    const double elapsed = seconds_since(start) / 2.0;
    const bool identical = a_out.str() == b_out.str() && !a_out.str().empty();
    report(10, identical && a == 0 && b == 0 && elapsed < 60.0,
           "two default runs give byte-identical JSON; suite < 60 s",
           std::string(identical ? "identical" : "different") + " (" + std::to_string(a_out.str().size()) +
               " bytes), exit " + std::to_string(a) + ", " + sci(elapsed) + " s per run");
  }

  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
