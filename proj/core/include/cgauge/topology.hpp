#pragma once

// Betti numbers of products of spheres via the Kunneth formula.

#include <vector>

namespace cgauge {

/// Coefficients beta_0..beta_n of sum beta_i t^i.
class PoincarePolynomial {
 public:
  PoincarePolynomial() = default;
  explicit PoincarePolynomial(std::vector<int> betti);

  /// 1 + t^m.
  static PoincarePolynomial sphere(int m);

  int top_degree() const { return static_cast<int>(betti_.size()) - 1; }
  int betti(int i) const;
  const std::vector<int>& coefficients() const { return betti_; }

  int total() const;
  int euler_characteristic() const;
  bool satisfies_duality() const;

  PoincarePolynomial operator*(const PoincarePolynomial& other) const;
  bool operator==(const PoincarePolynomial& other) const = default;

 private:
  std::vector<int> betti_;
};

/// Poincare polynomial of S^{m_1} x ... x S^{m_k}; an empty list is a point.
PoincarePolynomial poincare(const std::vector<int>& sphere_dims);

/// sum_{i=p}^{n-p} beta_i, both ends included. p = 0 gives the full sum.
/// Throws std::invalid_argument unless 0 <= p <= n/2.
int betti_window_sum(const PoincarePolynomial& poly, int p, int n);

}  // namespace cgauge
