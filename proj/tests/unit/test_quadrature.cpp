#include <cmath>
#include <numbers>
#include <numeric>
#include <vector>

#include <gtest/gtest.h>

#include "cgauge/parallel.hpp"
#include "cgauge/quadrature.hpp"

namespace cgauge {
namespace {

constexpr double kPi = std::numbers::pi;

// int_{S^d} prod_i x_i^{2 k_i} dS = 2 prod Gamma(k_i + 1/2) / Gamma(sum k_i + (d+1)/2).
double even_monomial_integral(const std::vector<int>& k) {
  double num = 2.0;
  int total = 0;
  for (int ki : k) {
    num *= std::tgamma(ki + 0.5);
    total += ki;
  }
  return num / std::tgamma(total + k.size() / 2.0);
}

TEST(SphereVolume, FrozenValues) {
  EXPECT_NEAR(sphere_volume(0), 2.0, 1e-15);
  EXPECT_NEAR(sphere_volume(1), 2.0 * kPi, 1e-14);
  EXPECT_NEAR(sphere_volume(2), 4.0 * kPi, 1e-14);
  EXPECT_NEAR(sphere_volume(3), 2.0 * kPi * kPi, 1e-13);
  EXPECT_NEAR(sphere_volume(5), kPi * kPi * kPi, 1e-12);
  EXPECT_NEAR(sphere_volume(2, 2.0), 16.0 * kPi, 1e-13);
}

TEST(GaussGegenbauer, IntegratesPolynomialsExactly) {
  for (double a : {-0.25, 0.0, 0.5, 1.0, 2.5}) {
    const GaussRule r = gauss_gegenbauer(6, a);
    ASSERT_EQ(r.nodes.size(), 6u);
    for (int deg = 0; deg <= 11; ++deg) {
      double q = 0.0;
      for (std::size_t i = 0; i < r.nodes.size(); ++i) q += r.weights[i] * std::pow(r.nodes[i], deg);
      // int t^deg (1-t^2)^a = B((deg+1)/2, a+1) for even deg.
      const double exact =
          deg % 2 ? 0.0 : std::tgamma((deg + 1) / 2.0) * std::tgamma(a + 1.0) / std::tgamma((deg + 1) / 2.0 + a + 1.0);
      EXPECT_NEAR(q, exact, 1e-13) << "a=" << a << " deg=" << deg;
    }
  }
}

TEST(CircleRule, ExactForTrigonometricPolynomials) {
  const SphereRule r = circle_rule(8);
  EXPECT_EQ(r.size(), 8u);
  EXPECT_NEAR(r.total_weight(), 2.0 * kPi, 1e-14);
  for (int m = 1; m < 8; ++m) {
    const double c = integrate_region(r, [m](const Vector& u) { return std::cos(m * std::atan2(u(1), u(0))); });
    EXPECT_NEAR(c, 0.0, 1e-13);
  }
  EXPECT_NEAR(integrate_region(r, [](const Vector& u) { return u(0) * u(0); }), kPi, 1e-14);
  EXPECT_THROW(circle_rule(3), ResolutionError);
}

TEST(SphereRule, NodesOnSphereAndWeightsPositive) {
  for (int d = 1; d <= 5; ++d) {
    const SphereRule r = sphere_rule(d, 3);
    EXPECT_EQ(r.dim, d);
    for (std::size_t i = 0; i < r.size(); ++i) {
      EXPECT_NEAR(r.nodes[i].norm(), 1.0, 1e-14);
      EXPECT_GT(r.weights[i], 0.0);
    }
    EXPECT_NEAR(r.total_weight(), sphere_volume(d), 1e-12);
  }
  EXPECT_THROW(sphere_rule(2, 0), ResolutionError);
}

TEST(SphereRule, ExactForEvenMonomials) {
  for (int d = 2; d <= 4; ++d) {
    const SphereRule r = sphere_rule(d, 4);  // degree <= 9
    const std::vector<std::vector<int>> cases = {{2, 0, 0}, {1, 1, 0}, {2, 1, 1}, {0, 2, 2}, {1, 1, 1}};
    for (const auto& base : cases) {
      std::vector<int> k(static_cast<std::size_t>(d + 1), 0);
      for (std::size_t i = 0; i < base.size() && i < k.size(); ++i) k[i] = base[i];
      const double q = integrate_region(r, [&](const Vector& u) {
        double v = 1.0;
        for (std::size_t i = 0; i < k.size(); ++i) v *= std::pow(u(static_cast<Eigen::Index>(i)), 2 * k[i]);
        return v;
      });
      EXPECT_NEAR(q, even_monomial_integral(k), 1e-12) << "d=" << d;
    }
    EXPECT_NEAR(integrate_region(r, [](const Vector& u) { return u(0) * u(1) * u(1); }), 0.0, 1e-13);
  }
}

TEST(IntegrateRegion, IndicatorSelectsNodes) {
  const SphereRule r = circle_rule(64);
  EXPECT_NEAR(integrate_region(r, [](const Vector&) { return 1.0; }, [](const Vector& u) { return u(1) > 0.0; }),
              kPi, 1e-13);
}

TEST(ProductRule, TotalWeightIsVolume) {
  const ProductRule r({sphere_rule(2, 3), sphere_rule(2, 3)}, {1.0, 2.0});
  EXPECT_EQ(r.size(), r.factor(0).size() * r.factor(1).size());
  EXPECT_NEAR(r.total_weight(), 4.0 * kPi * 16.0 * kPi, 1e-10);
  // Last factor runs fastest.
  const ManifoldPoint p0 = r.point(0);
  const ManifoldPoint p1 = r.point(1);
  EXPECT_EQ(p0.factors[0], p1.factors[0]);
  EXPECT_NE(p0.factors[1], p1.factors[1]);
  const double f = integrate_product(r, [](const ManifoldPoint& x) { return x.factors[0](2) * x.factors[0](2); });
  EXPECT_NEAR(f, 4.0 * kPi / 3.0 * 16.0 * kPi, 1e-10);
}

TEST(UnitNormalBundle, IteratedSum) {
  const ProductRule m({sphere_rule(2, 2)}, {1.0});
  const SphereRule fiber = circle_rule(16);
  const double v = integrate_unit_normal_bundle(m, fiber, [](const ManifoldPoint&, const Vector& xi) {
    return xi(0) * xi(0);
  });
  EXPECT_NEAR(v, 4.0 * kPi * kPi, 1e-11);
}

TEST(Parallel, VisitsEveryIndexOnce) {
  std::vector<int> hits(1000, 0);
  parallel_for(hits.size(), [&](std::size_t i) { hits[i] += 1; });
  EXPECT_EQ(std::accumulate(hits.begin(), hits.end(), 0), 1000);
  EXPECT_TRUE(std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; }));
  EXPECT_GE(worker_count(), 1);
}

TEST(Parallel, ExceptionsPropagate) {
  EXPECT_THROW(parallel_for(100, [](std::size_t i) {
                 if (i == 37) throw std::runtime_error("boom");
               }),
               std::runtime_error);
}

TEST(PairwiseSum, ExactOnSmallIntegersAndOrderFixed) {
  std::vector<double> v(1001);
  std::iota(v.begin(), v.end(), 0.0);
  EXPECT_EQ(pairwise_sum(v), 500500.0);
  std::vector<double> w = {1e16, 1.0, -1e16, 1.0};
  EXPECT_EQ(pairwise_sum(w), pairwise_sum(w));
  EXPECT_EQ(pairwise_sum(std::vector<double>{}), 0.0);
}

TEST(Integration, ThreadCountDoesNotChangeBits) {
  const ProductRule r({sphere_rule(2, 5), sphere_rule(2, 5)}, {1.0, 1.0});
  auto f = [](const ManifoldPoint& x) { return std::exp(x.factors[0](0) * x.factors[1](1)); };
  const double multi = integrate_product(r, f);
  setenv("CURVATURE_GAUGE_THREADS", "1", 1);
  const double single = integrate_product(r, f);
  unsetenv("CURVATURE_GAUGE_THREADS");
  EXPECT_EQ(multi, single);
}

}  // namespace
}  // namespace cgauge
