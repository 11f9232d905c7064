#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "cgauge/constants_lab.hpp"
#include "cgauge/submanifold.hpp"
#include "oracles.hpp"

namespace cgauge {
namespace {

constexpr double kPi = std::numbers::pi;

BilinearForm s2xs2_alpha() {
  const auto imm = CatalogImmersion::product_of_spheres(2, 1.0, 2, 1.0);
  return imm.second_fundamental_form(ManifoldPoint{{Vector::Unit(3, 0), Vector::Unit(3, 1)}});
}

TEST(Functionals, FrozenS2xS2Values) {
  const BilinearForm a = s2xs2_alpha();
  EXPECT_NEAR(sc(a), 4.0, 1e-14);
  EXPECT_NEAR(phi_scal(a), 64.0 / 3.0, 1e-12);
  EXPECT_NEAR(phi_k(a, 1.0 / 3.0), 64.0 / 3.0, 1e-12);
  const SphereRule rule = circle_rule(256);
  const Region omega = region_of(a, Mode::scal_normalized());
  EXPECT_EQ(omega.shape().kind, RegionKind::OmegaSet);
  EXPECT_EQ(omega.shape().index_lo, 2);
  EXPECT_EQ(omega.shape().index_hi, 2);
  EXPECT_NEAR(psi(a, omega, rule), kPi / 8.0, 1e-12);
  EXPECT_NEAR(ratio_value(a, Mode::scal_normalized(), rule), 512.0 / (3.0 * kPi), 1e-10);
}

TEST(Functionals, PhiKMatchesDefinition) {
  std::mt19937_64 rng(41);
  const BilinearForm b = testing::random_form(rng, 4, 2);
  const QuadTensor gg = kn_scalar(Matrix::Identity(4, 4), Matrix::Identity(4, 4));
  EXPECT_NEAR(phi_k(b, 0.7), (kn_vector(b, b) - gg * 0.7).norm_squared(), 1e-9);
  EXPECT_NEAR(phi_scal(b), phi_k(b, sc(b) / 12.0), 1e-9);
}

TEST(Regions, ModeSelection) {
  const BilinearForm a = s2xs2_alpha();
  EXPECT_EQ(region_of(a, Mode::fixed_k(-1.0)).shape().kind, RegionKind::FullSphere);
  EXPECT_EQ(region_of(a, Mode::fixed_k(0.5)).shape().kind, RegionKind::OmegaSet);
  EXPECT_EQ(region_of(a * -1.0, Mode::scal_normalized()).shape().kind, RegionKind::OmegaSet);
  std::mt19937_64 rng(42);
  EXPECT_THROW(region_of(testing::random_form(rng, 4, 3), Mode::fixed_k(1.0)), CodimensionError);
  EXPECT_THROW(psi(a, region_of(a, Mode::fixed_k(1.0)), sphere_rule(2, 3)), DimensionError);
}

TEST(Ratios, ScaleInvarianceAndConstraint) {
  const SphereRule rule = circle_rule(256);
  const BilinearForm a = s2xs2_alpha();
  const Mode m = Mode::scal_normalized();
  EXPECT_NEAR(ratio_value(a * 3.0, m, rule), ratio_value(a, m, rule), 1e-10);
  EXPECT_TRUE(satisfies_constraint(a, 1.0));  // |sc| = ||a||^2
  EXPECT_FALSE(satisfies_constraint(a, 1.01));
  EXPECT_THROW(omega_ratio(a, m, 1.5, rule), ConstraintError);
  EXPECT_THROW(ratio_value(signature_form(4, 2, 4), m, rule), DegenerateRegion);  // index 0 or 4 only
}

TEST(SignatureForm, Structure) {
  const BilinearForm s = signature_form(4, 2, 2);
  EXPECT_NEAR(s.norm_squared(), 4.0, 0.0);
  EXPECT_NEAR(sc(s), -4.0, 1e-14);  // (n - 2l)^2 - n
  EXPECT_NEAR(sc(signature_form(5, 2, 1)), 4.0, 1e-14);
  EXPECT_THROW(signature_form(4, 2, 5), std::invalid_argument);
}

TEST(Moments, CircleClosedForm) {
  const SphereRule rule = circle_rule(512);
  for (int n = 2; n <= 10; ++n) {
    // |cos|^n is only C^n, so odd n converge more slowly.
    EXPECT_NEAR(abs_power_moment(n, rule), abs_power_moment_circle(n), n % 2 ? 1e-8 : 1e-12) << n;
  }
  EXPECT_NEAR(abs_power_moment_circle(4), 3.0 * kPi / 4.0, 1e-14);
}

TEST(Moments, SignatureRatioClosedForm) {
  const SphereRule rule = circle_rule(512);
  for (int n : {4, 5, 6}) {
    for (int l = 0; l <= n; ++l) {
      const BilinearForm s = signature_form(n, 2, l);
      // The full-sphere ratio with k = 0 uses the unrestricted region.
      const double moment = abs_power_moment(n, rule);
      const double scv = sc(s);
      const double phi = phi_k(s, scv / (n * (n - 1.0)));
      EXPECT_NEAR(phi / std::pow(moment, 4.0 / n), signature_form_ratio_closed_form(n, l, moment), 1e-9);
    }
  }
}

TEST(RemarkBound, LiteralFormulaAndConditions) {
  const SphereRule rule = circle_rule(512);
  // n = 10, l = 2: s = 26.
  const double i10 = abs_power_moment_circle(10);
  const double s = 26.0;
  const double expected = std::pow(2.0, 0.4) * (8.0 * 100.0 * 81.0 - s * s) / (4.0 * 90.0 * std::pow(i10, 0.4));
  EXPECT_NEAR(remark_bound(10, 2, 0.5, 2, rule), expected, 1e-9 * expected);
  EXPECT_NEAR(remark_bound(10, 2, 0.5, 2, rule), 197.4, 0.1);
  EXPECT_NEAR(signature_form_ratio_closed_form(10, 2, i10), 554.3, 0.1);
  EXPECT_THROW(remark_bound(4, 2, 0.5, 2, rule), ConditionError);  // s <= 0
  EXPECT_THROW(remark_bound(10, 2, 2.0, 2, rule), ConditionError);  // delta^2 > s / n
  EXPECT_THROW(remark_bound(10, 2, 0.5, 0, rule), ConditionError);
}

TEST(Sequences, DefaultPattern) {
  const SequencePattern p = default_pattern(4, 2);
  EXPECT_EQ(p.s, (std::vector<double>{-0.5, -0.5, 2.0}));
  EXPECT_EQ(p.t, (std::vector<double>{1.0}));
  EXPECT_EQ(p.theta(0, 0), -1.0);
  EXPECT_EQ(p.theta(0, 2), 0.25);
  EXPECT_THROW(default_pattern(4, 3), CodimensionError);
}

TEST(Sequences, DegeneratingRatios) {
  const SphereRule rule = circle_rule(256);
  const SequencePattern pat = default_pattern(4, 2);
  std::vector<SequenceRecord> recs;
  for (int m : {8, 16, 32, 64}) recs.push_back(example_sequence(m, 4, 2, pat, rule).record);
  for (std::size_t i = 0; i < recs.size(); ++i) {
    EXPECT_NEAR(recs[i].gamma_norm, 1.0, 1e-12);
    EXPECT_GT(recs[i].sc_value, 0.0);
    if (i > 0) {
      EXPECT_LT(std::abs(recs[i].sc_value), std::abs(recs[i - 1].sc_value));
      EXPECT_LE(recs[i].ratio, recs[i - 1].ratio);
    }
    const double eta_pow = std::pow(1.0 / recs[i].m, 3);
    EXPECT_NEAR(recs[i].psi, eta_pow * recs[i].sigma, 1e-12 * recs[i].psi);
  }
  EXPECT_LT(recs.back().ratio, 0.25 * recs.front().ratio);
  // Frozen values.
  EXPECT_NEAR(recs.front().ratio, 35.601975454200506, 1e-9);
  EXPECT_NEAR(recs.back().ratio, 2.1701664418317481, 1e-9);
}

TEST(Sequences, RescaledSequenceTransfersRatio) {
  const SphereRule rule = circle_rule(256);
  const SequencePattern pat = default_pattern(4, 2);
  for (int m : {8, 32}) {
    const SequenceTerm t = example_sequence(m, 4, 2, pat, rule);
    const BilinearForm b = example_beta_sequence(m, 2.0, 4, 2, pat);
    EXPECT_NEAR(sc(b), 24.0, 1e-10);
    const double r = ratio_value(b, Mode::fixed_k(2.0), rule);
    EXPECT_NEAR(r, t.record.ratio, 1e-8 * r);
  }
  EXPECT_THROW(example_beta_sequence(8, -1.0, 4, 2, pat), SignError);
}

TEST(Sequences, Errors) {
  const SphereRule rule = circle_rule(64);
  const SequencePattern pat = default_pattern(4, 2);
  EXPECT_THROW(example_sequence(1, 4, 2, pat, rule), PatternError);
  EXPECT_THROW(example_sequence(0, 4, 2, pat, rule), PatternError);
  SequencePattern bad = pat;
  bad.s.pop_back();
  EXPECT_THROW(example_sequence(8, 4, 2, bad, rule), PatternError);
}

TEST(Estimate, SmallBudgetIsReproducibleAndBounded) {
  EstimateOptions opt;
  opt.budget = 2000;
  const ConstantEstimate a = estimate_constant(opt);
  const ConstantEstimate b = estimate_constant(opt);
  EXPECT_EQ(a.estimated_min, b.estimated_min);
  EXPECT_EQ(a.argmin_form.pack(), b.argmin_form.pack());
  EXPECT_GT(a.estimated_min, 0.0);
  EXPECT_LE(a.estimated_min, a.candidate_ratio * (1.0 + 1e-12));
  EXPECT_LE(a.sample_count, opt.budget);
  EXPECT_TRUE(satisfies_constraint(a.argmin_form, opt.delta));
  EXPECT_EQ(a.label, "empirical upper estimate");
}

TEST(Estimate, FixedKMode) {
  EstimateOptions opt;
  opt.budget = 1000;
  opt.mode = Mode::fixed_k(1.0);
  const ConstantEstimate a = estimate_constant(opt);
  EXPECT_GT(a.estimated_min, 0.0);
  EXPECT_TRUE(std::isfinite(a.estimated_min));
}

TEST(Estimate, Errors) {
  EstimateOptions opt;
  opt.delta = 2.0;
  EXPECT_THROW(estimate_constant(opt), EmptyDomain);
  opt.delta = 0.5;
  opt.p = 3;
  EXPECT_THROW(estimate_constant(opt), CodimensionError);
  opt.p = 2;
  opt.budget = 10;
  EXPECT_THROW(estimate_constant(opt), std::invalid_argument);
}

}  // namespace
}  // namespace cgauge
