#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include <gtest/gtest.h>

#include "cqm/error.hpp"
#include "cqm/units.hpp"

using namespace cqm;

namespace {

constexpr double kPi = std::numbers::pi;

}  // namespace

TEST(Units, AtomicUnitsGiveUnitBohrRadiusAndHalfHartree) {
  const auto c = atomic_units();
  EXPECT_DOUBLE_EQ(4.0 * kPi * c.epsilon0, 1.0);
  EXPECT_DOUBLE_EQ(bohr_radius(c), 1.0);
  const auto h = derive_scales(c, System::kHydrogen);
  EXPECT_DOUBLE_EQ(h.E_ground, -0.5);
  EXPECT_DOUBLE_EQ(h.b, 1.0);
  EXPECT_DOUBLE_EQ(h.lambda, 1.0);
  EXPECT_DOUBLE_EQ(h.energy_level(2), -0.125);
}

TEST(Units, OscillatorScalesInAtomicUnits) {
  const auto o = derive_scales(atomic_units(), System::kOscillator);
  EXPECT_NEAR(o.b, std::sqrt(2.0), 1e-15);
  EXPECT_DOUBLE_EQ(o.lambda, 2.0);
  EXPECT_DOUBLE_EQ(o.E_ground, 1.5);
  EXPECT_DOUBLE_EQ(o.energy_level(1, 0), 3.5);
  EXPECT_DOUBLE_EQ(o.energy_level(0, 2), 3.5);
  EXPECT_FALSE(o.alpha0.has_value());
}

TEST(Units, SiBohrRadiusUsesReducedMass) {
  const auto c = si_codata();
  const double me = 9.1093837015e-31;
  const double mp = 1.67262192369e-27;
  EXPECT_NEAR(c.mu, me * mp / (me + mp), 1e-45);
  const double a0 = 4.0 * kPi * c.epsilon0 * c.hbar * c.hbar / (c.mu * c.charge_e * c.charge_e);
  EXPECT_NEAR(bohr_radius(c), a0, 1e-25);
  EXPECT_NEAR(bohr_radius(c), 5.29465e-11, 1e-15);
  const double eV = 1.602176634e-19;
  EXPECT_NEAR(derive_scales(c, System::kHydrogen).E_ground / eV, -13.598, 1e-3);
}

TEST(Units, ParseConstantsDerivesReducedMass) {
  std::istringstream in("# test constants\nhbar = 1\ne=1\nepsilon0=0.0795774715459476678\nm_e=1\nm_p=1\n");
  const auto c = parse_constants(in);
  EXPECT_DOUBLE_EQ(c.mu, 0.5);
  EXPECT_DOUBLE_EQ(c.charge_e, 1.0);
  EXPECT_NO_THROW(c.validate(System::kHydrogen));
}

TEST(Units, MissingFieldNamesTheField) {
  std::istringstream in("hbar=1\nmu=1\n");
  const auto c = parse_constants(in);
  try {
    c.validate(System::kHydrogen);
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kInvalidInput);
    const std::string msg = e.what();
    EXPECT_TRUE(msg.find("charge_e") != std::string::npos || msg.find("epsilon0") != std::string::npos) << msg;
  }
}

TEST(Units, NonPositiveHbarRejected) {
  auto c = atomic_units();
  c.hbar = 0.0;
  EXPECT_THROW(c.validate(), Error);
  c.hbar = -1.0;
  EXPECT_THROW(derive_scales(c, System::kHydrogen), Error);
}

TEST(Units, ResolveUnitsSourcesAndFiles) {
  EXPECT_DOUBLE_EQ(resolve_units("atomic").hbar, 1.0);
  EXPECT_NEAR(resolve_units("si").hbar, 1.054571817e-34, 1e-44);
  const std::string path = ::testing::TempDir() + "cqm_units.txt";
  {
    std::ofstream out(path);
    out << "hbar=2\nmu=1\ncharge_e=1\nepsilon0=0.0795774715459476678\nomega=3\n";
  }
  const auto c = resolve_units("file:" + path);
  EXPECT_DOUBLE_EQ(c.hbar, 2.0);
  EXPECT_DOUBLE_EQ(c.omega, 3.0);
  EXPECT_DOUBLE_EQ(bohr_radius(c), 4.0);
  EXPECT_THROW(resolve_units("imperial"), Error);
  EXPECT_THROW(resolve_units("file:/nonexistent/constants.txt"), Error);
}

TEST(Units, SystemNames) {
  EXPECT_STREQ(to_string(System::kHydrogen), "hydrogen");
  EXPECT_STREQ(to_string(System::kOscillator), "oscillator");
}
