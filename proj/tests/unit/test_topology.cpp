#include <gtest/gtest.h>

#include "cgauge/topology.hpp"

namespace cgauge {
namespace {

TEST(Poincare, Sphere) {
  const PoincarePolynomial s = PoincarePolynomial::sphere(4);
  EXPECT_EQ(s.coefficients(), (std::vector<int>{1, 0, 0, 0, 1}));
  EXPECT_EQ(s.total(), 2);
  EXPECT_EQ(s.euler_characteristic(), 2);
  EXPECT_EQ(PoincarePolynomial::sphere(3).euler_characteristic(), 0);
}

TEST(Poincare, KunnethProduct) {
  const PoincarePolynomial p = poincare({2, 2});
  EXPECT_EQ(p.coefficients(), (std::vector<int>{1, 0, 2, 0, 1}));
  EXPECT_EQ(p.total(), 4);
  EXPECT_EQ(p.euler_characteristic(), 4);
  EXPECT_TRUE(p.satisfies_duality());
  EXPECT_EQ(poincare({1, 1, 1}).coefficients(), (std::vector<int>{1, 3, 3, 1}));
  EXPECT_EQ(poincare({}).coefficients(), (std::vector<int>{1}));
  EXPECT_EQ(poincare({1, 3}), PoincarePolynomial::sphere(1) * PoincarePolynomial::sphere(3));
}

TEST(Poincare, BettiOutsideRangeIsZero) {
  const PoincarePolynomial p = poincare({2, 3});
  EXPECT_EQ(p.betti(-1), 0);
  EXPECT_EQ(p.betti(6), 0);
  EXPECT_EQ(p.betti(5), 1);
}

TEST(Poincare, DualityFailsForNonManifoldData) {
  EXPECT_FALSE(PoincarePolynomial({1, 2, 0}).satisfies_duality());
}

TEST(BettiWindow, InclusiveEnds) {
  const PoincarePolynomial p = poincare({2, 2});
  EXPECT_EQ(betti_window_sum(p, 0, 4), 4);
  EXPECT_EQ(betti_window_sum(p, 2, 4), 2);
  EXPECT_EQ(betti_window_sum(p, 1, 4), 2);
  EXPECT_THROW(betti_window_sum(p, 3, 4), std::invalid_argument);
  EXPECT_THROW(betti_window_sum(p, -1, 4), std::invalid_argument);
}

}  // namespace
}  // namespace cgauge
