#include "cqm/units.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <numbers>
#include <sstream>

#include "cqm/error.hpp"

namespace cqm {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::kInvalidInput: return "invalid-input";
    case ErrorKind::kInvalidQuantumNumbers: return "invalid-quantum-numbers";
    case ErrorKind::kInvalidState: return "invalid-state";
    case ErrorKind::kDomain: return "domain";
    case ErrorKind::kPoleProximity: return "pole-proximity";
    case ErrorKind::kSingularity: return "singularity";
    case ErrorKind::kQuadrature: return "quadrature";
    case ErrorKind::kUnsupported: return "unsupported";
    case ErrorKind::kInconsistentEvent: return "inconsistent-event";
    case ErrorKind::kStep: return "step";
    case ErrorKind::kCloud: return "cloud";
  }
  return "unknown";
}

const char* to_string(System system) noexcept {
  return system == System::kHydrogen ? "hydrogen" : "oscillator";
}

namespace {

void require_positive(double value, const char* field) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw Error(ErrorKind::kInvalidInput,
                std::string("constant '") + field + "' must be finite and strictly positive");
  }
}

void validate_masses(const PhysicalConstants& c) {
  if (c.m_e) require_positive(*c.m_e, "m_e");
  if (c.m_p) require_positive(*c.m_p, "m_p");
  if (c.m_e && c.m_p) {
    const double reduced = (*c.m_e * *c.m_p) / (*c.m_e + *c.m_p);
    if (std::abs(c.mu - reduced) > 1e-12 * reduced) {
      throw Error(ErrorKind::kInvalidInput,
                  "constant 'mu' is inconsistent with m_e*m_p/(m_e+m_p)");
    }
  }
}

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

double parse_number(const std::string& key, const std::string& text) {
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || trim(text.substr(used)).size() != 0) {
    throw Error(ErrorKind::kInvalidInput, "constant '" + key + "' is not a number: " + text);
  }
  return value;
}

}  // namespace

void PhysicalConstants::validate(System system) const {
  require_positive(hbar, "hbar");
  require_positive(mu, "mu");
  if (system == System::kHydrogen) {
    require_positive(charge_e, "charge_e");
    require_positive(epsilon0, "epsilon0");
  } else {
    require_positive(omega, "omega");
  }
  validate_masses(*this);
}

void PhysicalConstants::validate() const {
  validate(System::kHydrogen);
  validate(System::kOscillator);
}

PhysicalConstants atomic_units() {
  PhysicalConstants c;
  c.hbar = 1.0;
  c.mu = 1.0;
  c.charge_e = 1.0;
  c.epsilon0 = 1.0 / (4.0 * std::numbers::pi);
  c.omega = 1.0;
  return c;
}

PhysicalConstants si_codata() {
  PhysicalConstants c;
  c.hbar = 1.054571817e-34;
  c.m_e = 9.1093837015e-31;
  c.m_p = 1.67262192369e-27;
  c.mu = (*c.m_e * *c.m_p) / (*c.m_e + *c.m_p);
  c.charge_e = 1.602176634e-19;
  c.epsilon0 = 8.8541878128e-12;
  c.omega = 1.0e15;
  return c;
}

std::map<std::string, std::string> read_key_values(std::istream& in) {
  std::map<std::string, std::string> out;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw Error(ErrorKind::kInvalidInput,
                  "line " + std::to_string(line_no) + ": expected key=value");
    }
    out[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
  }
  return out;
}

PhysicalConstants parse_constants(std::istream& in) {
  const auto kv = read_key_values(in);
  const double missing = std::numeric_limits<double>::quiet_NaN();
  PhysicalConstants c;
  c.hbar = c.mu = c.charge_e = c.epsilon0 = c.omega = missing;
  bool have_mu = false;
  for (const auto& [key, text] : kv) {
    const double v = parse_number(key, text);
    if (key == "hbar") {
      c.hbar = v;
    } else if (key == "mu") {
      c.mu = v;
      have_mu = true;
    } else if (key == "charge_e" || key == "e") {
      c.charge_e = v;
    } else if (key == "epsilon0") {
      c.epsilon0 = v;
    } else if (key == "omega") {
      c.omega = v;
    } else if (key == "m_e") {
      c.m_e = v;
    } else if (key == "m_p") {
      c.m_p = v;
    } else {
      throw Error(ErrorKind::kInvalidInput, "unknown constant '" + key + "'");
    }
  }
  if (!have_mu && c.m_e && c.m_p) {
    c.mu = (*c.m_e * *c.m_p) / (*c.m_e + *c.m_p);
  }
  require_positive(c.hbar, "hbar");
  require_positive(c.mu, "mu");
  validate_masses(c);
  return c;
}

PhysicalConstants load_constants_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kInvalidInput, "cannot open constants file: " + path);
  return parse_constants(in);
}

PhysicalConstants resolve_units(const std::string& source) {
  if (source == "atomic") return atomic_units();
  if (source == "si") return si_codata();
  if (source.rfind("file:", 0) == 0) return load_constants_file(source.substr(5));
  throw Error(ErrorKind::kInvalidInput,
              "unknown unit system '" + source + "' (expected atomic, si or file:<path>)");
}

double bohr_radius(const PhysicalConstants& c) {
  return 4.0 * std::numbers::pi * c.epsilon0 * c.hbar * c.hbar / (c.mu * c.charge_e * c.charge_e);
}

double DerivedScales::energy_level(int n) const {
  if (system != System::kHydrogen) {
    throw Error(ErrorKind::kInvalidInput, "energy_level(n) is the hydrogen ladder");
  }
  if (n < 1) throw Error(ErrorKind::kInvalidQuantumNumbers, "principal quantum number must be >= 1");
  return E_ground / (static_cast<double>(n) * n);
}

double DerivedScales::energy_level(int n_r, int l) const {
  if (system != System::kOscillator) {
    throw Error(ErrorKind::kInvalidInput, "energy_level(n_r, l) is the oscillator ladder");
  }
  if (n_r < 0 || l < 0) {
    throw Error(ErrorKind::kInvalidQuantumNumbers, "oscillator quantum numbers must be >= 0");
  }
  const auto& c = constants;
  return c.hbar * c.omega * (2.0 * n_r + l + 1.5);
}

DerivedScales derive_scales(const PhysicalConstants& constants, System system) {
  constants.validate(system);
  DerivedScales s;
  s.system = system;
  s.constants = constants;
  const double hbar = constants.hbar;
  const double mu = constants.mu;
  if (system == System::kHydrogen) {
    s.alpha0 = bohr_radius(constants);
    s.b = *s.alpha0;
    s.lambda = 1.0;
    s.E_ground = -hbar * hbar / (2.0 * mu * s.b * s.b);
  } else {
    s.b = std::sqrt(2.0 * hbar / (mu * constants.omega));
    s.lambda = 2.0;
    s.E_ground = 1.5 * hbar * constants.omega;
  }
  return s;
}

}  // namespace cqm
