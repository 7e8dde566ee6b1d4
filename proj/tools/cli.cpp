#include "cli.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <numbers>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "cqm/conformal.hpp"
#include "cqm/error.hpp"
#include "cqm/suite.hpp"
#include "cqm/units.hpp"
#include "cqm/verify.hpp"
#include "json.hpp"

namespace cqm::cli {

namespace {

using json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string fmt(const char* spec, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

std::string complex_str(cplx v) {
  std::string s = fmt("%.17g", v.real());
  s += std::signbit(v.imag()) ? "-" : "+";
  s += fmt("%.17g", std::abs(v.imag()));
  return s + "i";
}

std::vector<double> parse_list(const std::string& text, std::size_t expected, const char* what) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError(std::string("cannot parse ") + what + " '" + text + "'");
    }
  }
  if (out.size() != expected) {
    throw UsageError(std::string(what) + " needs " + std::to_string(expected) +
                     " comma-separated values, got '" + text + "'");
  }
  return out;
}

QuantumNumbers parse_state(const std::string& text) {
  const auto v = parse_list(text, 3, "state");
  QuantumNumbers qn{static_cast<int>(v[0]), static_cast<int>(v[1]), static_cast<int>(v[2])};
  if (qn.n != v[0] || qn.l != v[1] || qn.k != v[2]) {
    throw UsageError("state quantum numbers must be integers, got '" + text + "'");
  }
  return qn;
}

System parse_system(const std::string& name) {
  if (name == "hydrogen") return System::kHydrogen;
  if (name == "oscillator") return System::kOscillator;
  throw UsageError("unknown system '" + name + "'");
}

// Units precedence: --units, then the config file, then CONFORMAL_QM_UNITS,
// then atomic units.
std::string units_source(const std::string& flag, const std::map<std::string, std::string>& config) {
  if (!flag.empty()) return flag;
  if (auto it = config.find("units"); it != config.end()) return it->second;
  if (const char* env = std::getenv("CONFORMAL_QM_UNITS"); env != nullptr && *env != '\0') return env;
  return "atomic";
}

std::map<std::string, std::string> load_config(const std::string& path) {
  if (path.empty()) return {};
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config file '" + path + "'");
  return read_key_values(in);
}

PhysicalConstants constants_for(const std::string& source) {
  try {
    return resolve_units(source);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

// Writes to the output path, or to `out` when the path is empty. The file is
// opened before any work starts so an unwritable path fails fast.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& out) : out_(&out) {
    if (path.empty()) return;
    file_.open(path, std::ios::binary | std::ios::trunc);
    if (!file_) throw UsageError("cannot write output file '" + path + "'");
    out_ = &file_;
  }
  std::ostream& stream() { return *out_; }

 private:
  std::ofstream file_;
  std::ostream* out_;
};

json number(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

json report_json(const VerificationReport& report) {
  json checks = json::array();
  for (const auto& c : report.checks) {
    checks.push_back({{"name", c.check_name},
                      {"eq_ref", c.eq_ref},
                      {"n_points", c.n_points},
                      {"max_abs", number(c.max_abs)},
                      {"max_rel", number(c.max_rel)},
                      {"mean_abs", number(c.mean_abs)},
                      {"tol", number(c.tol)},
                      {"criterion", c.criterion == Criterion::kRelative ? "relative" : "absolute"},
                      {"pass", c.pass},
                      {"detail", c.detail}});
  }
  return {{"suite", report.suite},
          {"units", report.units},
          {"seed", report.seed},
          {"checks", checks},
          {"overall_pass", report.overall_pass},
          {"no_checks", report.no_checks}};
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char ch : s) {
    if (ch == '"') quoted += '"';
    quoted += ch;
  }
  return quoted + "\"";
}

void write_report_csv(const VerificationReport& report, std::ostream& os) {
  os << "name,eq_ref,n_points,max_abs,max_rel,mean_abs,tol,pass,detail\n";
  for (const auto& c : report.checks) {
    os << csv_field(c.check_name) << ',' << csv_field(c.eq_ref) << ',' << c.n_points << ','
       << fmt("%.12g", c.max_abs) << ',' << fmt("%.12g", c.max_rel) << ','
       << fmt("%.12g", c.mean_abs) << ',' << fmt("%.12g", c.tol) << ','
       << (c.pass ? "true" : "false") << ',' << csv_field(c.detail) << '\n';
  }
}

struct VerifyOptions {
  std::string system = "both";
  std::optional<int> n;
  std::vector<std::string> states;
  std::optional<std::size_t> points;
  std::optional<std::uint64_t> seed;
  std::string format = "json";
  std::string output;
  std::optional<double> tol_analytic;
  std::optional<double> tol_fd;
  double corrupt_energy = 1.0;
  std::string units;
  std::string config;
};

template <class T>
T config_value(const std::map<std::string, std::string>& cfg, const std::string& key, T fallback) {
  auto it = cfg.find(key);
  if (it == cfg.end()) return fallback;
  std::istringstream in(it->second);
  T value{};
  if (!(in >> value) || !(in >> std::ws).eof()) {
    throw UsageError("config key '" + key + "' has invalid value '" + it->second + "'");
  }
  return value;
}

int cmd_verify(const VerifyOptions& opt, std::ostream& out, std::ostream& err) {
  const auto cfg_file = load_config(opt.config);
  SuiteConfig cfg;
  cfg.units_label = units_source(opt.units, cfg_file);
  cfg.constants = constants_for(cfg.units_label);

  std::string system = opt.system;
  if (opt.system == "both") system = config_value<std::string>(cfg_file, "system", "both");
  if (system != "both" && system != "hydrogen" && system != "oscillator") {
    throw UsageError("unknown system '" + system + "'");
  }
  const int n_max = opt.n.value_or(config_value(cfg_file, "n", 3));
  cfg.n_points = opt.points.value_or(config_value<std::size_t>(cfg_file, "points", 200));
  cfg.seed = opt.seed.value_or(config_value<std::uint64_t>(cfg_file, "seed", 42));
  cfg.tol_analytic = opt.tol_analytic.value_or(config_value(cfg_file, "tol_analytic", 1e-9));
  cfg.tol_fd = opt.tol_fd.value_or(config_value(cfg_file, "tol_fd", 1e-5));
  cfg.energy_scale = opt.corrupt_energy;
  const std::string format = opt.format;

  if (cfg.n_points == 0) throw UsageError("--points must be positive");
  if (!(cfg.tol_analytic > 0.0) || !(cfg.tol_fd > 0.0)) throw UsageError("tolerances must be positive");
  if (!(cfg.energy_scale > 0.0) || !std::isfinite(cfg.energy_scale)) {
    throw UsageError("--corrupt-energy must be a positive factor");
  }

  const bool want_h = system != "oscillator";
  const bool want_ho = system != "hydrogen";
  if (!opt.states.empty()) {
    for (const auto& text : opt.states) {
      const auto qn = parse_state(text);
      if (want_h == want_ho) throw UsageError("--state needs --system hydrogen or oscillator");
      const System sys = want_h ? System::kHydrogen : System::kOscillator;
      try {
        validate_quantum_numbers(sys, qn);
      } catch (const Error& e) {
        throw UsageError(e.what());
      }
      (sys == System::kHydrogen ? cfg.hydrogen_states : cfg.oscillator_states).push_back(qn);
    }
  } else {
    if (want_h) {
      if (n_max < 1) {
        throw UsageError("invalid quantum numbers: hydrogen principal quantum number n must be >= 1, got " +
                         std::to_string(n_max));
      }
      cfg.hydrogen_states = hydrogen_states_up_to(n_max);
    }
    if (want_ho) cfg.oscillator_states = SuiteConfig::defaults().oscillator_states;
  }

  Sink sink(opt.output, out);
  const auto report = run_suite(cfg);
  if (format == "csv") {
    write_report_csv(report, sink.stream());
  } else {
    sink.stream() << report_json(report).dump(2) << '\n';
  }
  for (const auto& c : report.checks) {
    if (!c.pass) err << "FAIL " << c.check_name << (c.detail.empty() ? "" : ": " + c.detail) << '\n';
  }
  if (report.no_checks) err << "no checks were run\n";
  return report.overall_pass ? kExitOk : kExitCheckFailed;
}

struct MapOptions {
  std::string x;
  double t = 0.0;
  double energy = 0.0;
  double b = 1.0;
  double lambda = 1.0;
  double hbar = 1.0;
};

int cmd_map(const MapOptions& opt, std::ostream& out) {
  const auto xv = parse_list(opt.x, 3, "--x");
  const Vec3 x{xv[0], xv[1], xv[2]};
  MapParams p{opt.energy, opt.b, opt.lambda, opt.hbar};
  try {
    p.validate();
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  const auto ev = map_forward(x, opt.t, p, Branch::kDirect);
  const auto ev_c = map_forward(x, opt.t, p, Branch::kConjugate);
  const auto back = map_inverse(ev, p);
  const auto back_c = map_inverse(ev_c, p);
  double err = std::abs(back.t - opt.t);
  for (int i = 0; i < 3; ++i) err = std::max(err, std::abs(back.x[i] - x[i]));
  err = std::max(err, std::abs(back_c.t - opt.t));
  for (int i = 0; i < 3; ++i) err = std::max(err, std::abs(back_c.x[i] - x[i]));
  json j = {{"z", {ev.z[0], ev.z[1], ev.z[2]}},
            {"s", complex_str(ev.s)},
            {"s_conjugate", complex_str(ev_c.s)},
            {"s_re", ev.s.real()},
            {"s_im", ev.s.imag()},
            {"roundtrip_error", err}};
  out << j.dump(2) << '\n';
  return kExitOk;
}

json monomial_json(const Monomial& m) {
  return {{"factor", m.factor.str()},
          {"b_power", m.b_power.str()},
          {"r_power", m.r_power.str()},
          {"coefficient", m.coefficient}};
}

int cmd_decompose(double lambda, double b, const std::string& units, std::ostream& out) {
  if (!(lambda > 0.0)) throw UsageError("--lambda must be positive");
  if (!(b > 0.0)) throw UsageError("--b must be positive");
  const auto c = constants_for(units_source(units, {}));
  const auto rep = decompose_lambda(lambda, b, c);
  json j = {{"lambda", rep.lambda.str()},
            {"b", b},
            {"term_kinetic", monomial_json(rep.term_kinetic)},
            {"term_potential_like", monomial_json(rep.term_potential_like)},
            {"separable", rep.separable}};
  if (rep.separable) {
    j["V"] = {{"coefficient", rep.V_form->coefficient},
              {"power", rep.V_form->r_power.to_double()},
              {"factor", rep.V_form->factor.str()},
              {"b_power", rep.V_form->b_power.str()}};
    j["E0"] = *rep.E0_value;
    j["E0_form"] = monomial_json(*rep.E0_form);
  } else {
    j["V"] = nullptr;
    j["E0"] = nullptr;
  }
  out << j.dump(2) << '\n';
  return kExitOk;
}

int cmd_constants(const std::string& units, std::ostream& out) {
  const std::string source = units_source(units, {});
  const auto c = constants_for(source);
  json j = {{"units", source},
            {"hbar", c.hbar},
            {"mu", c.mu},
            {"charge_e", c.charge_e},
            {"epsilon0", c.epsilon0},
            {"omega", c.omega}};
  if (c.m_e) j["m_e"] = *c.m_e;
  if (c.m_p) j["m_p"] = *c.m_p;
  const auto h = derive_scales(c, System::kHydrogen);
  const auto o = derive_scales(c, System::kOscillator);
  j["hydrogen"] = {{"alpha0", *h.alpha0}, {"b", h.b}, {"lambda", h.lambda}, {"E_ground", h.E_ground}};
  j["oscillator"] = {{"b", o.b}, {"lambda", o.lambda}, {"E_ground", o.E_ground}};
  out << j.dump(2) << '\n';
  return kExitOk;
}

struct PlotOptions {
  std::string system = "hydrogen";
  std::string state;
  double r_min = 0.01;
  double r_max = 12.0;
  int grid = 200;
  std::string units;
  std::string output;
};

int cmd_plot_data(const PlotOptions& opt, std::ostream& out) {
  const System system = parse_system(opt.system);
  const auto c = constants_for(units_source(opt.units, {}));
  QuantumNumbers qn = system == System::kHydrogen ? QuantumNumbers{1, 0, 0} : QuantumNumbers{0, 0, 0};
  if (!opt.state.empty()) qn = parse_state(opt.state);
  if (opt.grid < 2) throw UsageError("--grid must be at least 2");
  if (!(opt.r_min > 0.0) || !(opt.r_max > opt.r_min)) {
    throw UsageError("radial range needs 0 < r-min < r-max");
  }
  Eigenstate state;
  try {
    state = make_state(derive_scales(c, system), qn);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  Sink sink(opt.output, out);
  auto& os = sink.stream();
  const double L = state.length_scale();
  const double kin = c.hbar * c.hbar / (2.0 * c.mu);
  const double l = qn.l;
  os << "r,R,R_tilde,residual\n";
  for (int i = 0; i < opt.grid; ++i) {
    const double r = (opt.r_min + (opt.r_max - opt.r_min) * i / (opt.grid - 1.0)) * L;
    const auto R = radial(state, r);
    const double V = system == System::kHydrogen
                         ? -c.charge_e * c.charge_e / (4.0 * std::numbers::pi * c.epsilon0 * r)
                         : 0.5 * c.mu * c.omega * c.omega * r * r;
    const double residual =
        -kin * (R.d2 + 2.0 * R.d1 / r - l * (l + 1.0) * R.value / (r * r)) + (V - state.energy) * R.value;
    os << fmt("%.12g", r) << ',' << fmt("%.12g", R.value) << ','
       << fmt("%.12g", transformed_radial(state, r)) << ',' << fmt("%.12g", std::abs(residual)) << '\n';
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Verification toolkit for the isometric complex-time map of hydrogen and the oscillator",
               "conformal-qm"};
  app.require_subcommand(1);

  VerifyOptions vopt;
  auto* verify = app.add_subcommand("verify", "Run the verification suite and write a report");
  verify->add_option("--system", vopt.system, "hydrogen, oscillator or both")
      ->check(CLI::IsMember({"hydrogen", "oscillator", "both"}));
  verify->add_option("--n", vopt.n, "Largest hydrogen principal quantum number (default 3)");
  verify->add_option("--state", vopt.states, "Explicit state n,l,k (repeatable)");
  verify->add_option("--points", vopt.points, "Sample points per check (default 200)");
  verify->add_option("--seed", vopt.seed, "Seed of the sample clouds (default 42)");
  verify->add_option("--format", vopt.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  verify->add_option("--output", vopt.output, "Report path (default stdout)");
  verify->add_option("--tol-analytic", vopt.tol_analytic, "Tolerance of analytic checks (default 1e-9)");
  verify->add_option("--tol-fd", vopt.tol_fd, "Tolerance of finite-difference checks (default 1e-5)");
  verify->add_option("--corrupt-energy", vopt.corrupt_energy,
                     "Scale every state energy by this factor (perturbation test)");
  verify->add_option("--units", vopt.units, "atomic, si or file:<path>");
  verify->add_option("--config", vopt.config, "key=value file; flags override it");

  MapOptions mopt;
  auto* map = app.add_subcommand("map", "Map one spacetime point to complex coordinates");
  map->add_option("--x", mopt.x, "Position x,y,z")->required();
  map->add_option("--t", mopt.t, "Time");
  map->add_option("--E", mopt.energy, "Energy of the map")->required();
  map->add_option("--b", mopt.b, "Length scale b");
  map->add_option("--lambda", mopt.lambda, "Exponent lambda");
  map->add_option("--hbar", mopt.hbar, "Reduced Planck constant");

  double dlambda = 1.0;
  double db = 1.0;
  std::string dunits;
  auto* decompose = app.add_subcommand("decompose", "Split the lambda relation into V and E0");
  decompose->add_option("--lambda", dlambda, "Exponent lambda")->required();
  decompose->add_option("--b", db, "Length scale b");
  decompose->add_option("--units", dunits, "atomic, si or file:<path>");

  std::string cunits;
  auto* constants = app.add_subcommand("constants", "Print the constants and derived scales");
  constants->add_option("--units", cunits, "atomic, si or file:<path>");

  PlotOptions popt;
  auto* plot = app.add_subcommand("plot-data", "Write radial profiles as CSV");
  plot->add_option("--system", popt.system, "hydrogen or oscillator")
      ->check(CLI::IsMember({"hydrogen", "oscillator"}));
  plot->add_option("--state", popt.state, "State n,l,k");
  plot->add_option("--r-min", popt.r_min, "Smallest radius in length-scale units");
  plot->add_option("--r-max", popt.r_max, "Largest radius in length-scale units");
  plot->add_option("--grid", popt.grid, "Number of grid points");
  plot->add_option("--units", popt.units, "atomic, si or file:<path>");
  plot->add_option("--output", popt.output, "CSV path (default stdout)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (*verify) return cmd_verify(vopt, out, err);
    if (*map) return cmd_map(mopt, out);
    if (*decompose) return cmd_decompose(dlambda, db, dunits, out);
    if (*constants) return cmd_constants(cunits, out);
    if (*plot) return cmd_plot_data(popt, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace cqm::cli
