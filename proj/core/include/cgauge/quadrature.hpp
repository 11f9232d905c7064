#pragma once

// Deterministic positive-weight quadrature on unit spheres, on products of
// round spheres, and on unit normal bundles over such products.

#include <functional>
#include <vector>

#include "cgauge/tensor_core.hpp"

namespace cgauge {

/// Vol(S^d(r)) = 2 pi^{(d+1)/2} / Gamma((d+1)/2) * r^d.
double sphere_volume(int d, double radius = 1.0);

/// One-dimensional Gauss rule for the weight (1 - t^2)^a on [-1, 1].
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Golub-Welsch on the symmetric Jacobi recurrence; a > -1/2, q >= 1.
GaussRule gauss_gegenbauer(int q, double a);

/// Nodes and weights on the unit sphere S^d in R^{d+1}.
struct SphereRule {
  int dim = 0;
  std::vector<Vector> nodes;
  std::vector<double> weights;

  std::size_t size() const { return nodes.size(); }
  double total_weight() const;
};

/// N equispaced angles offset by half a step, weights 2 pi / N. Exact for
/// trigonometric polynomials of degree < N. Throws ResolutionError for N < 4.
SphereRule circle_rule(int n_nodes);

/// Tensor rule on S^d: Gauss-Gegenbauer in each polar angle (weight
/// sin^{d-k} phi_k) and an equispaced azimuth. level + 1 polar nodes,
/// 2 (level + 1) azimuthal nodes; exact for polynomials of degree
/// <= 2 level + 1. d = 1 reduces to circle_rule.
SphereRule sphere_rule(int d, int level);

using Integrand = std::function<double(const Vector&)>;
using Indicator = std::function<bool(const Vector&)>;

/// Sum over nodes with indicator true of weight * f(node), reduced pairwise
/// in node order. An empty indicator selects every node.
double integrate_region(const SphereRule& rule, const Integrand& f, const Indicator& indicator = {});

/// A point of a product of spheres: one unit vector per factor.
struct ManifoldPoint {
  std::vector<Vector> factors;
};

/// Product of sphere rules scaled to radii r_i; weights carry r_i^{d_i}.
class ProductRule {
 public:
  ProductRule(std::vector<SphereRule> factors, std::vector<double> radii);

  std::size_t size() const { return size_; }
  std::size_t factor_count() const { return factors_.size(); }
  const std::vector<double>& radii() const { return radii_; }
  const SphereRule& factor(std::size_t i) const { return factors_[i]; }

  ManifoldPoint point(std::size_t i) const;
  double weight(std::size_t i) const;
  double total_weight() const;

 private:
  std::vector<SphereRule> factors_;
  std::vector<double> radii_;
  std::vector<double> scale_;
  std::size_t size_ = 0;
};

/// sum_x w_x f(x), evaluated in parallel and reduced pairwise in node order.
double integrate_product(const ProductRule& rule, const std::function<double(const ManifoldPoint&)>& f);

using BundleIntegrand = std::function<double(const ManifoldPoint&, const Vector&)>;
using BundleIndicator = std::function<bool(const ManifoldPoint&, const Vector&)>;

/// Iterated sum sum_x w_x sum_xi w_xi [indicator] f(x, xi) over the unit
/// normal bundle, with fiber directions given in an orthonormal normal frame.
double integrate_unit_normal_bundle(const ProductRule& manifold, const SphereRule& fiber,
                                    const BundleIntegrand& f, const BundleIndicator& indicator = {});

}  // namespace cgauge
