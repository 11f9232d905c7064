#include "cgauge/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "cgauge/parallel.hpp"

namespace cgauge {

double sphere_volume(int d, double radius) {
  if (d < 0) throw DimensionError("sphere dimension must be nonnegative");
  const double half = 0.5 * (d + 1);
  return 2.0 * std::pow(std::numbers::pi, half) / std::tgamma(half) * std::pow(radius, d);
}

GaussRule gauss_gegenbauer(int q, double a) {
  if (q < 1) throw ResolutionError("Gauss rule needs at least one node");
  if (!(a > -0.5)) throw std::invalid_argument("gauss_gegenbauer: exponent must exceed -1/2");
  // Monic recurrence for Jacobi(a, a): zero diagonal, off-diagonal
  // b_k^2 = k (k + 2a) / ((2k + 2a + 1)(2k + 2a - 1)).
  Matrix jac = Matrix::Zero(q, q);
  for (int k = 1; k < q; ++k) {
    const double kk = k;
    const double b2 = kk * (kk + 2 * a) / ((2 * kk + 2 * a + 1) * (2 * kk + 2 * a - 1));
    jac(k - 1, k) = std::sqrt(b2);
    jac(k, k - 1) = std::sqrt(b2);
  }
  const double mu0 = std::sqrt(std::numbers::pi) * std::tgamma(a + 1) / std::tgamma(a + 1.5);
  Eigen::SelfAdjointEigenSolver<Matrix> es(jac);
  GaussRule rule;
  rule.nodes.resize(static_cast<std::size_t>(q));
  rule.weights.resize(static_cast<std::size_t>(q));
  for (int i = 0; i < q; ++i) {
    const double v0 = es.eigenvectors()(0, i);
    rule.nodes[static_cast<std::size_t>(i)] = es.eigenvalues()(i);
    rule.weights[static_cast<std::size_t>(i)] = mu0 * v0 * v0;
  }
  // The rule is symmetric; enforce it exactly so odd moments cancel.
  for (int i = 0; i < q / 2; ++i) {
    const auto lo = static_cast<std::size_t>(i);
    const auto hi = static_cast<std::size_t>(q - 1 - i);
    const double t = 0.5 * (rule.nodes[hi] - rule.nodes[lo]);
    const double w = 0.5 * (rule.weights[hi] + rule.weights[lo]);
    rule.nodes[lo] = -t;
    rule.nodes[hi] = t;
    rule.weights[lo] = w;
    rule.weights[hi] = w;
  }
  if (q % 2 == 1) rule.nodes[static_cast<std::size_t>(q / 2)] = 0.0;
  return rule;
}

double SphereRule::total_weight() const { return pairwise_sum(weights); }

SphereRule circle_rule(int n_nodes) {
  if (n_nodes < 4) {
    throw ResolutionError("circle_rule needs at least 4 nodes, got " + std::to_string(n_nodes));
  }
  SphereRule rule;
  rule.dim = 1;
  rule.nodes.reserve(static_cast<std::size_t>(n_nodes));
  const double step = 2.0 * std::numbers::pi / n_nodes;
  for (int j = 0; j < n_nodes; ++j) {
    const double theta = (j + 0.5) * step;
    Vector v(2);
    v << std::cos(theta), std::sin(theta);
    rule.nodes.push_back(std::move(v));
  }
  rule.weights.assign(static_cast<std::size_t>(n_nodes), step);
  return rule;
}

SphereRule sphere_rule(int d, int level) {
  if (d < 1) throw DimensionError("sphere_rule needs d >= 1");
  if (level < 1) throw ResolutionError("sphere_rule needs level >= 1");
  const int q = level + 1;
  const int azimuth = std::max(4, 2 * (level + 1));
  const SphereRule circle = circle_rule(azimuth);
  if (d == 1) return circle;

  // Polar angle k (1-based) carries the weight sin^{d-k}; in t = cos(phi)
  // that is (1 - t^2)^{(d-k-1)/2}.
  std::vector<GaussRule> polar;
  for (int k = 1; k <= d - 1; ++k) polar.push_back(gauss_gegenbauer(q, 0.5 * (d - k - 1)));

  SphereRule rule;
  rule.dim = d;
  std::vector<int> digit(static_cast<std::size_t>(d - 1), 0);
  for (;;) {
    for (std::size_t c = 0; c < circle.size(); ++c) {
      Vector v(d + 1);
      double sin_prod = 1.0;
      double w = circle.weights[c];
      for (int k = 0; k < d - 1; ++k) {
        const auto& g = polar[static_cast<std::size_t>(k)];
        const auto idx = static_cast<std::size_t>(digit[static_cast<std::size_t>(k)]);
        const double t = g.nodes[idx];
        v(k) = sin_prod * t;
        sin_prod *= std::sqrt(std::max(0.0, 1.0 - t * t));
        w *= g.weights[idx];
      }
      v(d - 1) = sin_prod * circle.nodes[c](0);
      v(d) = sin_prod * circle.nodes[c](1);
      rule.nodes.push_back(std::move(v));
      rule.weights.push_back(w);
    }
    int k = d - 2;
    while (k >= 0 && ++digit[static_cast<std::size_t>(k)] == q) {
      digit[static_cast<std::size_t>(k)] = 0;
      --k;
    }
    if (k < 0) break;
  }
  return rule;
}

double integrate_region(const SphereRule& rule, const Integrand& f, const Indicator& indicator) {
  std::vector<double> terms(rule.size(), 0.0);
  for (std::size_t i = 0; i < rule.size(); ++i) {
    if (!indicator || indicator(rule.nodes[i])) terms[i] = rule.weights[i] * f(rule.nodes[i]);
  }
  return pairwise_sum(terms);
}

ProductRule::ProductRule(std::vector<SphereRule> factors, std::vector<double> radii)
    : factors_(std::move(factors)), radii_(std::move(radii)) {
  if (factors_.empty() || factors_.size() != radii_.size()) {
    throw DimensionError("ProductRule needs one radius per factor");
  }
  size_ = 1;
  for (std::size_t a = 0; a < factors_.size(); ++a) {
    if (!(radii_[a] > 0.0)) throw std::invalid_argument("ProductRule radii must be positive");
    size_ *= factors_[a].size();
    scale_.push_back(std::pow(radii_[a], factors_[a].dim));
  }
}

ManifoldPoint ProductRule::point(std::size_t i) const {
  ManifoldPoint x;
  x.factors.resize(factors_.size());
  for (std::size_t a = factors_.size(); a-- > 0;) {
    const std::size_t m = factors_[a].size();
    x.factors[a] = factors_[a].nodes[i % m];
    i /= m;
  }
  return x;
}

double ProductRule::weight(std::size_t i) const {
  double w = 1.0;
  for (std::size_t a = factors_.size(); a-- > 0;) {
    const std::size_t m = factors_[a].size();
    w *= factors_[a].weights[i % m] * scale_[a];
    i /= m;
  }
  return w;
}

double ProductRule::total_weight() const {
  std::vector<double> w(size_);
  for (std::size_t i = 0; i < size_; ++i) w[i] = weight(i);
  return pairwise_sum(w);
}

double integrate_product(const ProductRule& rule,
                         const std::function<double(const ManifoldPoint&)>& f) {
  std::vector<double> terms(rule.size(), 0.0);
  parallel_for(rule.size(), [&](std::size_t i) { terms[i] = rule.weight(i) * f(rule.point(i)); });
  return pairwise_sum(terms);
}

double integrate_unit_normal_bundle(const ProductRule& manifold, const SphereRule& fiber,
                                    const BundleIntegrand& f, const BundleIndicator& indicator) {
  return integrate_product(manifold, [&](const ManifoldPoint& x) {
    Indicator fiber_indicator;
    if (indicator) fiber_indicator = [&](const Vector& xi) { return indicator(x, xi); };
    return integrate_region(
        fiber, [&](const Vector& xi) { return f(x, xi); }, fiber_indicator);
  });
}

}  // namespace cgauge
