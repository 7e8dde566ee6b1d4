#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "cqm/error.hpp"
#include "cqm/verify.hpp"

using namespace cqm;

namespace {

DerivedScales hydrogen() { return derive_scales(atomic_units(), System::kHydrogen); }
DerivedScales oscillator() { return derive_scales(atomic_units(), System::kOscillator); }

SampleCloud single_point(const Vec3& x) {
  SampleCloud c;
  c.points.push_back({x, 0.0});
  return c;
}

}  // namespace

TEST(Accumulator, ExcludesNodesFromRelativeStatsOnly) {
  ResidualAccumulator acc;
  acc.add(1e-12, 1.0, 1.0);
  acc.add(1e-3, 1e-20, 1e-20);  // at a node: huge relative error, tiny magnitude
  const auto s = acc.finish("x", "y", 1e-9);
  EXPECT_EQ(s.n_points, 2u);
  EXPECT_DOUBLE_EQ(s.max_rel, 1e-12);
  EXPECT_DOUBLE_EQ(s.max_abs, 1e-3);
  EXPECT_TRUE(s.pass);
}

TEST(Accumulator, AbsoluteCriterionAndEmptyAndNan) {
  ResidualAccumulator acc;
  acc.add(2e-9, 1.0);
  EXPECT_FALSE(acc.finish("x", "y", 1e-9, Criterion::kAbsolute).pass);
  EXPECT_FALSE(ResidualAccumulator{}.finish("x", "y", 1.0).pass);
  ResidualAccumulator bad;
  bad.add(std::nan(""), 1.0);
  EXPECT_FALSE(bad.finish("x", "y", 1.0).pass);
}

TEST(EvRelation, HandArithmeticAtUnitRadius) {
  // lambda = 1, b = 1, r = 1: LHS = 1 - 2 = -1, RHS = 2 (-1 + 1/2) = -1.
  const auto c = atomic_units();
  const auto s1 = check_ev_relation(1.0, 1.0, c, single_point({1.0, 0.0, 0.0}));
  EXPECT_LE(s1.max_abs, 1e-15);
  EXPECT_TRUE(s1.pass);
  // lambda = 2, b = sqrt 2, r = 1: LHS = 4/4 - 6/2 = -2, RHS = 2 (1/2 - 3/2) = -2.
  const auto s2 = check_ev_relation(2.0, std::sqrt(2.0), c, single_point({0.0, 1.0, 0.0}));
  EXPECT_LE(s2.max_abs, 1e-15);
  const auto form = potential_from_lambda(2, std::sqrt(2.0), c);
  EXPECT_NEAR(form.V_coefficient, 0.5, 1e-15);
  EXPECT_NEAR(form.E0, 1.5, 1e-15);
  EXPECT_THROW(check_ev_relation(3.0, 1.0, c, single_point({1.0, 0.0, 0.0})), Error);
}

TEST(Decompose, LinearAndQuadraticAreSeparable) {
  const auto c = atomic_units();
  const auto one = decompose_lambda(Rational(1), 1.0, c);
  ASSERT_TRUE(one.separable);
  EXPECT_EQ(one.V_form->factor, Rational(-1));
  EXPECT_EQ(one.V_form->r_power, Rational(-1));
  EXPECT_DOUBLE_EQ(one.V_form->coefficient, -1.0);
  EXPECT_DOUBLE_EQ(*one.E0_value, -0.5);
  EXPECT_EQ(one.E0_form->factor, Rational(-1, 2));

  const auto two = decompose_lambda(2.0, std::sqrt(2.0), c);
  ASSERT_TRUE(two.separable);
  EXPECT_EQ(two.V_form->factor, Rational(2));
  EXPECT_EQ(two.V_form->b_power, Rational(4));
  EXPECT_EQ(two.V_form->r_power, Rational(2));
  EXPECT_NEAR(*two.E0_value, 1.5, 1e-15);
  EXPECT_EQ(two.term_kinetic.factor, Rational(2));
  EXPECT_EQ(two.term_potential_like.factor, Rational(-3));
}

TEST(Decompose, OtherExponentsAreNotSeparable) {
  const auto c = atomic_units();
  for (double lam : {0.5, 1.5, 3.0}) {
    const auto rep = decompose_lambda(lam, 1.0, c);
    EXPECT_FALSE(rep.separable) << lam;
    EXPECT_FALSE(rep.V_form.has_value());
    EXPECT_FALSE(rep.E0_value.has_value());
  }
  const auto three = decompose_lambda(3.0, 1.0, c);
  EXPECT_EQ(three.term_kinetic.r_power, Rational(4));
  EXPECT_EQ(three.term_potential_like.r_power, Rational(1));
  EXPECT_THROW(decompose_lambda(0.0, 1.0, c), Error);
  EXPECT_THROW(decompose_lambda(-1.0, 1.0, c), Error);
}

TEST(Decompose, SiCoefficientsMatchTables) {
  const auto c = si_codata();
  EXPECT_TRUE(table_crosscheck(System::kHydrogen, c).pass);
  EXPECT_TRUE(table_crosscheck(System::kOscillator, c).pass);
  EXPECT_TRUE(decomposition_check(c).pass);
}

TEST(GroundState, RejectsExcitedStates) {
  const auto s = hydrogen_state(hydrogen(), {2, 0, 0});
  try {
    ground_state_condition(s, cloud_for(s, 10, 1));
    FAIL() << "expected invalid state";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kInvalidState);
  }
}

TEST(GroundState, BothSystemsSatisfyIt) {
  for (const auto& g : {hydrogen_state(hydrogen(), {1, 0, 0}), oscillator_state(oscillator(), {0, 0, 0})}) {
    const auto rep = ground_state_condition(g, cloud_for(g, 100, 42));
    EXPECT_TRUE(rep.dz.pass) << rep.dz.max_rel;
    EXPECT_TRUE(rep.s_equation.pass);
  }
}

TEST(Residuals, CorruptedEnergyFailsAtOnePercent) {
  auto s = hydrogen_state(hydrogen(), {2, 1, 0});
  s.energy *= 1.01;
  const auto stats = residual_schrodinger(s, cloud_for(s, 200, 42));
  EXPECT_FALSE(stats.pass);
  EXPECT_NEAR(stats.max_rel, 0.01 / 1.01, 1e-6);
}

TEST(Residuals, ExcitedStatesPass) {
  const auto s = hydrogen_state(hydrogen(), {3, 2, 1});
  const auto cloud = cloud_for(s, 200, 42);
  EXPECT_LE(residual_schrodinger(s, cloud).max_rel, 1e-9);
  EXPECT_LE(residual_transformed(s, cloud).max_rel, 1e-9);
  EXPECT_LE(residual_operator_identity(s, cloud).max_rel, 1e-9);
  const auto o = oscillator_state(oscillator(), {1, 0, 0});
  EXPECT_LE(residual_schrodinger(o, cloud_for(o, 200, 42)).max_rel, 1e-9);
  EXPECT_THROW(residual_operator_identity(o, cloud_for(o, 10, 42)), Error);
}

TEST(Residuals, GroundTransformedResidualIsTiny) {
  for (const auto& g : {hydrogen_state(hydrogen(), {1, 0, 0}), oscillator_state(oscillator(), {0, 0, 0})}) {
    const auto s = residual_transformed(g, cloud_for(g, 200, 42), 1e-12);
    EXPECT_TRUE(s.pass) << s.max_rel;
  }
}

TEST(Residuals, OriginPointsAreSkippedAndCounted) {
  const auto s = hydrogen_state(hydrogen(), {1, 0, 0});
  auto cloud = cloud_for(s, 20, 42);
  cloud.points.push_back({{0.0, 0.0, 0.0}, 0.0});
  const auto stats = residual_schrodinger(s, cloud);
  EXPECT_EQ(stats.n_points, 20u);
  EXPECT_NE(stats.detail.find("1 points skipped"), std::string::npos);
  for (int i = 0; i < 5; ++i) cloud.points.push_back({{0.0, 0.0, 0.0}, 0.0});
  EXPECT_THROW(residual_schrodinger(s, cloud), Error);
}

TEST(Ladder, AxisStatesAreProportionalToCoordinate) {
  const auto o = oscillator();
  for (int axis = 0; axis < 3; ++axis) {
    const auto f = oscillator_axis_state(o, axis);
    const Vec3 x{0.7, -0.5, 0.3};
    const cplx ratio = f(x, 0.0).psi / (x[axis] * std::exp(-0.5 * 0.83));
    const Vec3 y{-0.2, 0.9, 1.1};
    const cplx ratio2 = f(y, 0.0).psi / (y[axis] * std::exp(-0.5 * (0.04 + 0.81 + 1.21)));
    EXPECT_NEAR(std::abs(ratio - ratio2), 0.0, 1e-14) << axis;
  }
  EXPECT_THROW(oscillator_axis_state(o, 3), Error);
}

TEST(Ladder, RaisingAndCommutatorChecksPass) {
  const auto g = oscillator_state(oscillator(), {0, 0, 0});
  const auto cloud = cloud_for(g, 200, 42);
  EXPECT_TRUE(ladder_lowering(g, cloud).pass);
  for (int axis = 0; axis < 3; ++axis) {
    EXPECT_TRUE(ladder_raising(g, axis, cloud).pass);
    const auto comm = ladder_commutator_check(g, axis, cloud);
    EXPECT_TRUE(comm.pass) << comm.max_rel;
    EXPECT_NE(comm.detail.find("ratio = 1"), std::string::npos) << comm.detail;
  }
  EXPECT_THROW(ladder_lowering(oscillator_state(oscillator(), {1, 0, 0}), cloud), Error);
}

TEST(Map, RoundTripProperty) {
  EXPECT_TRUE(map_roundtrip(1.0, 1.0, -0.5, 1.0, 100, 7).pass);
  EXPECT_TRUE(map_roundtrip(2.0, std::sqrt(2.0), 1.5, 1.0, 100, 7).pass);
}

TEST(Holomorphy, SuiteCheckPasses) {
  const auto rep = holomorphy_check(hydrogen(), 4, 200, 42);
  EXPECT_TRUE(rep.analytic.pass);
  EXPECT_EQ(rep.analytic.max_abs, 0.0);
  EXPECT_TRUE(rep.radial_form.pass);
  EXPECT_TRUE(rep.finite_difference.pass) << rep.finite_difference.max_rel;
}

TEST(Adjudication, RatiosAreFactorials) {
  const auto s = convention_adjudication(hydrogen(), 4);
  EXPECT_TRUE(s.pass);
  EXPECT_NE(s.detail.find("(1,0):1 "), std::string::npos) << s.detail;
  EXPECT_NE(s.detail.find("(2,0):2 "), std::string::npos) << s.detail;
  EXPECT_NE(s.detail.find("(3,1):24 "), std::string::npos) << s.detail;
  EXPECT_NE(s.detail.find("(4,3):5040"), std::string::npos) << s.detail;
  EXPECT_TRUE(radial_norm_textbook(hydrogen(), 4).pass);
  EXPECT_TRUE(transformed_ground_radial(hydrogen()).pass);
}
