#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "cgauge/submanifold.hpp"
#include "geodesics.hpp"
#include "oracles.hpp"

namespace cgauge {
namespace {

constexpr double kPi = std::numbers::pi;

using testing::geodesic_acceleration;
using testing::random_point;

std::vector<CatalogImmersion> catalog() {
  return {CatalogImmersion::product_of_spheres(2, 1.0, 2, 1.0), CatalogImmersion::product_of_spheres(1, 0.5, 3, 2.0),
          CatalogImmersion::sphere_in_codim(4, 1.0, 2), CatalogImmersion::sphere_in_codim(3, 1.5, 3)};
}

TEST(Catalog, Basics) {
  const auto s2s2 = CatalogImmersion::product_of_spheres(2, 1.0, 2, 1.0);
  EXPECT_EQ(s2s2.dim(), 4);
  EXPECT_EQ(s2s2.codim(), 2);
  EXPECT_EQ(s2s2.name(), "S^2(1)xS^2(1)");
  EXPECT_NEAR(s2s2.volume(), 16.0 * kPi * kPi, 1e-12);
  EXPECT_EQ(s2s2.topology().coefficients(), (std::vector<int>{1, 0, 2, 0, 1}));
  const auto s4 = CatalogImmersion::sphere_in_codim(4, 1.0, 2);
  EXPECT_EQ(s4.ambient_dim(), 6);
  EXPECT_EQ(s4.name(), "S^4(1) in R^6");
  EXPECT_NEAR(s4.scaled(2.0).factors()[0].radius, 2.0, 0.0);
}

TEST(Catalog, FramesAreOrthonormalAndComplementary) {
  std::mt19937_64 rng(21);
  for (const auto& imm : catalog()) {
    const ManifoldPoint x = random_point(rng, imm);
    Matrix frame(imm.ambient_dim(), imm.ambient_dim());
    frame << imm.tangent_frame(x), imm.normal_frame(x);
    EXPECT_LT((frame.transpose() * frame - Matrix::Identity(imm.ambient_dim(), imm.ambient_dim())).norm(), 1e-13)
        << imm.name();
  }
}

TEST(Catalog, TangentFrameSpansVelocities) {
  std::mt19937_64 rng(22);
  for (const auto& imm : catalog()) {
    const ManifoldPoint x = random_point(rng, imm);
    const Matrix t = imm.tangent_frame(x);
    for (int i = 0; i < imm.dim(); ++i) {
      const double h = 1e-6;
      const Vector v = (imm.position(testing::geodesic_point(imm, x, t.col(i), h)) -
                        imm.position(testing::geodesic_point(imm, x, t.col(i), -h))) /
                       (2 * h);
      EXPECT_LT((v - t.col(i)).norm(), 1e-8) << imm.name();
    }
  }
}

TEST(SecondFundamentalForm, MatchesNormalAccelerationOfGeodesics) {
  std::mt19937_64 rng(23);
  for (const auto& imm : catalog()) {
    const ManifoldPoint x = random_point(rng, imm);
    const Matrix t = imm.tangent_frame(x);
    const Matrix nf = imm.normal_frame(x);
    for (int trial = 0; trial < 5; ++trial) {
      const Vector X = t * testing::random_unit(rng, imm.dim());
      const Vector acc = geodesic_acceleration(imm, x, X, 1e-4);
      // Geodesic acceleration is purely normal and equals alpha(X, X).
      EXPECT_LT((t.transpose() * acc).norm(), 1e-6);
      EXPECT_LT((acc - imm.second_fundamental_vector(x, X, X)).norm(), 1e-6) << imm.name();
      EXPECT_LT((nf * nf.transpose() * acc - acc).norm(), 1e-6);
    }
  }
}

TEST(SecondFundamentalForm, GaussEquationGivesClosedFormCurvature) {
  std::mt19937_64 rng(24);
  for (const auto& imm : catalog()) {
    const ManifoldPoint x = random_point(rng, imm);
    const BilinearForm a = imm.second_fundamental_form(x);
    const QuadTensor r = gauss_curvature(a);
    EXPECT_LT((r - imm.curvature_closed_form()).norm(), 1e-12) << imm.name();
    EXPECT_NEAR(scal(r), imm.scal_closed_form(), 1e-12);
    EXPECT_NEAR(a.norm_squared(), imm.alpha_norm_sq_closed_form(), 1e-12);
  }
}

TEST(SecondFundamentalForm, FrozenValues) {
  const auto s2s2 = CatalogImmersion::product_of_spheres(2, 1.0, 2, 1.0);
  EXPECT_DOUBLE_EQ(s2s2.scal_closed_form(), 4.0);
  EXPECT_DOUBLE_EQ(s2s2.alpha_norm_sq_closed_form(), 4.0);
  const auto s4 = CatalogImmersion::sphere_in_codim(4, 2.0, 2);
  EXPECT_DOUBLE_EQ(s4.scal_closed_form(), 3.0);
  EXPECT_DOUBLE_EQ(s4.alpha_norm_sq_closed_form(), 1.0);
}

TEST(PinchRatio, CatalogValues) {
  std::mt19937_64 rng(25);
  const auto s2s2 = CatalogImmersion::product_of_spheres(2, 1.0, 2, 1.0);
  EXPECT_NEAR(pinch_ratio(s2s2, random_point(rng, s2s2)), 1.0, 1e-12);
  const auto s4 = CatalogImmersion::sphere_in_codim(4, 3.0, 2);
  EXPECT_NEAR(pinch_ratio(s4, random_point(rng, s4)), 3.0, 1e-12);
}

TEST(LipschitzKilling, SignFollowsDimension) {
  const auto s4 = CatalogImmersion::sphere_in_codim(4, 2.0, 2);
  ManifoldPoint x{{Vector::Unit(5, 0)}};
  Vector xi = Vector::Zero(2);
  xi(0) = 1.0;
  // A_xi = -(1/2) Id on the outward normal.
  EXPECT_NEAR(lipschitz_killing(s4, x, xi), 1.0 / 16.0, 1e-14);
}

TEST(TotalCurvature, TightCatalogValues) {
  const Resolution res;
  const auto s2s2 = CatalogImmersion::product_of_spheres(2, 1.0, 2, 1.0);
  EXPECT_NEAR(total_abs_curvature(s2s2, res).value, 4.0, 1e-3);
  EXPECT_NEAR(bundle_abs_det_integral(s2s2, res), 4.0 * kPi * kPi * kPi, 1e-3 * 124.0);
  const auto idx = index_bundle_integrals(s2s2, res);
  ASSERT_EQ(idx.size(), 5u);
  EXPECT_NEAR(idx[2], 2.0 * kPi * kPi * kPi, 1e-3 * 62.0);
  EXPECT_LT(idx[1], 1e-12);
  EXPECT_LT(idx[3], 1e-12);
  EXPECT_NEAR(total_curvature_index(s2s2, 0, res).value, 1.0, 1e-3);
  const auto s4 = CatalogImmersion::sphere_in_codim(4, 1.0, 2);
  EXPECT_NEAR(total_abs_curvature(s4, res).value, 2.0, 1e-3);
}

TEST(TotalCurvature, ScaleInvariant) {
  const Resolution res;
  for (const auto& imm : {CatalogImmersion::product_of_spheres(2, 1.0, 2, 1.0),
                          CatalogImmersion::sphere_in_codim(4, 1.0, 2)}) {
    const double base = total_abs_curvature(imm, res).value;
    for (double c : {0.5, 3.0}) EXPECT_NEAR(total_abs_curvature(imm.scaled(c), res).value, base, 1e-6);
  }
}

TEST(CurvatureFunctional, MatchesClosedForm) {
  const Resolution res;
  const auto s2s2 = CatalogImmersion::product_of_spheres(2, 1.0, 2, 1.0);
  const double v = curvature_functional(s2s2, CurvatureMode::ScalNormalized, 0.0, res).value;
  EXPECT_NEAR(v, 256.0 * kPi * kPi / 3.0, 1e-9 * v);
  EXPECT_NEAR(curvature_functional_closed_form(s2s2, CurvatureMode::ScalNormalized, 0.0), 256.0 * kPi * kPi / 3.0,
              1e-9);
  const auto mixed = CatalogImmersion::product_of_spheres(1, 0.5, 3, 2.0);
  EXPECT_NEAR(curvature_functional(mixed, CurvatureMode::FixedK, 0.3, res).value,
              curvature_functional_closed_form(mixed, CurvatureMode::FixedK, 0.3), 1e-8);
}

TEST(CurvatureFunctional, PointwiseValueOnS2xS2) {
  std::mt19937_64 rng(26);
  const auto s2s2 = CatalogImmersion::product_of_spheres(2, 1.0, 2, 1.0);
  const BilinearForm a = s2s2.second_fundamental_form(random_point(rng, s2s2));
  double sq = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k)
        for (int l = 0; l < 4; ++l) {
          const double d = testing::gauss_component(a, i, j, k, l) - testing::r1_component(i, j, k, l) / 3.0;
          sq += d * d;
        }
  EXPECT_NEAR(sq, 16.0 / 3.0, 1e-12);
}

TEST(CurvatureFunctional, VanishesOnRoundSpheres) {
  const Resolution res;
  for (double r : {1.0, 2.0}) {
    const auto s4 = CatalogImmersion::sphere_in_codim(4, r, 2);
    EXPECT_LT(curvature_functional(s4, CurvatureMode::FixedK, 1.0 / (r * r), res).value, 1e-10);
  }
  EXPECT_THROW(curvature_functional(CatalogImmersion::sphere_in_codim(1, 1.0, 2), CurvatureMode::FixedK, 1.0, res),
               DimensionError);
}

}  // namespace
}  // namespace cgauge
