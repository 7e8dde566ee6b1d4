#include <gtest/gtest.h>

#include "cqm/suite.hpp"

using namespace cqm;

TEST(Suite, HydrogenStateEnumeration) {
  EXPECT_EQ(hydrogen_states_up_to(1).size(), 1u);
  EXPECT_EQ(hydrogen_states_up_to(3).size(), 14u);
  EXPECT_EQ(hydrogen_states_up_to(4).size(), 30u);
  EXPECT_TRUE(hydrogen_states_up_to(0).empty());
}

TEST(Suite, DefaultConfigPasses) {
  const auto report = run_suite(SuiteConfig::defaults());
  EXPECT_TRUE(report.overall_pass);
  EXPECT_FALSE(report.no_checks);
  for (const auto& c : report.checks) {
    EXPECT_TRUE(c.pass) << c.check_name << " " << c.detail;
    if (c.check_name.rfind("schrodinger/", 0) == 0) EXPECT_GE(c.n_points, 180u);
  }
}

TEST(Suite, EmptyStateSetHasNoChecks) {
  SuiteConfig cfg;
  const auto report = run_suite(cfg);
  EXPECT_TRUE(report.no_checks);
  EXPECT_FALSE(report.overall_pass);
  EXPECT_TRUE(report.checks.empty());
}

TEST(Suite, CorruptedEnergyFails) {
  auto cfg = SuiteConfig::defaults();
  cfg.energy_scale = 1.01;
  const auto report = run_suite(cfg);
  EXPECT_FALSE(report.overall_pass);
  bool found = false;
  for (const auto& c : report.checks) {
    if (c.check_name == "schrodinger/H(2,1,0)") {
      found = true;
      EXPECT_FALSE(c.pass);
      EXPECT_NEAR(c.max_rel, 1e-2, 2e-3);
    }
  }
  EXPECT_TRUE(found);
}

TEST(Suite, SubCheckErrorsAreRecorded) {
  SuiteConfig cfg;
  cfg.hydrogen_states = {{2, 5, 0}};
  const auto report = run_suite(cfg);
  EXPECT_FALSE(report.overall_pass);
  ASSERT_FALSE(report.checks.empty());
  EXPECT_EQ(report.checks.front().check_name, "state/H(2,5,0)");
  EXPECT_NE(report.checks.front().detail.find("error:"), std::string::npos);
}

TEST(Suite, Deterministic) {
  auto cfg = SuiteConfig::defaults();
  cfg.hydrogen_states = hydrogen_states_up_to(2);
  const auto a = run_suite(cfg);
  const auto b = run_suite(cfg);
  ASSERT_EQ(a.checks.size(), b.checks.size());
  for (std::size_t i = 0; i < a.checks.size(); ++i) {
    EXPECT_EQ(a.checks[i].check_name, b.checks[i].check_name);
    EXPECT_EQ(a.checks[i].max_abs, b.checks[i].max_abs);
    EXPECT_EQ(a.checks[i].max_rel, b.checks[i].max_rel);
    EXPECT_EQ(a.checks[i].mean_abs, b.checks[i].mean_abs);
  }
}

TEST(Suite, SiUnitsPass) {
  auto cfg = SuiteConfig::defaults();
  cfg.constants = si_codata();
  cfg.units_label = "si";
  const auto report = run_suite(cfg);
  for (const auto& c : report.checks) EXPECT_TRUE(c.pass) << c.check_name << " " << c.detail;
}
