#pragma once

#include <istream>
#include <map>
#include <optional>
#include <string>

namespace cqm {

enum class System { kHydrogen, kOscillator };

const char* to_string(System system) noexcept;

// Physical constants in a consistent unit system. Electrostatics are written
// in SI-like form (Coulomb energy e^2 / (4 pi epsilon0 r)), so Hartree atomic
// units use epsilon0 = 1 / (4 pi).
struct PhysicalConstants {
  double hbar = 1.0;
  double mu = 1.0;        // reduced mass
  double charge_e = 1.0;
  double epsilon0 = 0.0;  // set by the factory functions
  double omega = 1.0;     // oscillator angular frequency
  std::optional<double> m_e;
  std::optional<double> m_p;

  // Checks the fields a given system needs. Hydrogen ignores omega, the
  // oscillator ignores charge_e and epsilon0. Throws kInvalidInput naming
  // the offending field.
  void validate(System system) const;
  void validate() const;  // every field
};

// Hartree atomic units: hbar = mu = e = 1, 4 pi epsilon0 = 1, omega = 1.
PhysicalConstants atomic_units();

// CODATA 2018 SI values; mu is the electron-proton reduced mass and omega is
// a nominal 1e15 rad/s.
PhysicalConstants si_codata();

// Reads `key=value` lines ('#' comments). Recognized keys: hbar, mu,
// charge_e (alias e), epsilon0, omega, m_e, m_p. If mu is absent it is
// derived from m_e and m_p.
PhysicalConstants parse_constants(std::istream& in);
PhysicalConstants load_constants_file(const std::string& path);

// Resolves "atomic", "si" or "file:<path>".
PhysicalConstants resolve_units(const std::string& source);

// Generic key=value reader shared with the CLI config loader.
std::map<std::string, std::string> read_key_values(std::istream& in);

struct DerivedScales {
  System system = System::kHydrogen;
  PhysicalConstants constants;
  std::optional<double> alpha0;  // Bohr radius; hydrogen only
  double b = 1.0;                // length scale of the complex-time map
  double lambda = 1.0;           // exponent of the map
  double E_ground = 0.0;

  // Hydrogen: E_ground / n^2. Oscillator: hbar omega (n + 3/2) with
  // n = 2 n_r + l passed as (n_r, l).
  double energy_level(int n) const;
  double energy_level(int n_r, int l) const;

  double length_scale() const { return b; }
};

double bohr_radius(const PhysicalConstants& c);

DerivedScales derive_scales(const PhysicalConstants& constants, System system);

}  // namespace cqm
