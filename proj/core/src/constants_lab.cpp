#include "cgauge/constants_lab.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace cgauge {

std::string Mode::label() const {
  if (kind == Kind::ScalNormalized) return "scal-normalized";
  std::ostringstream os;
  os << "fixed-k(" << k << ")";
  return os.str();
}

double phi_k(const BilinearForm& beta, double k) {
  const int n = beta.dim();
  const Matrix g = Matrix::Identity(n, n);
  return (kn_vector(beta, beta) - kn_scalar(g, g) * k).norm_squared();
}

double phi_scal(const BilinearForm& beta) {
  const int n = beta.dim();
  if (n < 2) throw DimensionError("phi_scal needs n >= 2");
  return phi_k(beta, sc(beta) / (n * (n - 1.0)));
}

Region::Region(RegionShape shape, BilinearForm beta, double tol)
    : shape_(shape), beta_(std::move(beta)), tol_(tol) {}

bool Region::contains(const Vector& u) const {
  if (shape_.kind == RegionKind::FullSphere) return true;
  const int idx = inertia(contract(beta_, u), tol_).negative;
  return shape_.index_lo <= idx && idx <= shape_.index_hi;
}

Region region_of(const BilinearForm& beta, const Mode& mode, double tol) {
  const int n = beta.dim();
  const int p = beta.codim();
  const bool omega = mode.kind == Mode::Kind::FixedK ? mode.k > 0.0 : sc(beta) > 0.0;
  RegionShape shape;
  shape.n = n;
  shape.p = p;
  if (omega) {
    if (p < 2 || 2 * p > n) {
      throw CodimensionError("Omega region needs 2 <= p <= n/2, got n=" + std::to_string(n) +
                             " p=" + std::to_string(p));
    }
    shape.kind = RegionKind::OmegaSet;
    shape.index_lo = p;
    shape.index_hi = n - p;
  } else {
    shape.kind = RegionKind::FullSphere;
    shape.index_lo = 0;
    shape.index_hi = n;
  }
  return Region(shape, beta, tol);
}

double psi(const BilinearForm& beta, const Region& region, const SphereRule& rule) {
  if (rule.dim != beta.codim() - 1) throw DimensionError("fiber rule must live on S^{p-1}");
  return integrate_region(
      rule, [&](const Vector& u) { return std::abs(contract(beta, u).determinant()); },
      [&](const Vector& u) { return region.contains(u); });
}

double ratio_value(const BilinearForm& beta, const Mode& mode, const SphereRule& rule) {
  const int n = beta.dim();
  const double ps = psi(beta, region_of(beta, mode), rule);
  if (!(ps > 0.0)) throw DegenerateRegion("psi vanishes: the region carries no determinant mass");
  const double phi = mode.kind == Mode::Kind::FixedK ? phi_k(beta, mode.k) : phi_scal(beta);
  return phi / std::pow(ps, 4.0 / n);
}

bool satisfies_constraint(const BilinearForm& beta, double delta) {
  const double nsq = beta.norm_squared();
  return std::abs(sc(beta)) >= delta * delta * nsq - 1e-12 * std::max(1.0, nsq);
}

double omega_ratio(const BilinearForm& beta, const Mode& mode, double delta, const SphereRule& rule) {
  if (!satisfies_constraint(beta, delta)) {
    throw ConstraintError("|sc(beta)| < delta^2 ||beta||^2");
  }
  return ratio_value(beta, mode, rule);
}

SphereRule fiber_sphere_rule(int p, int circle_nodes, int level) {
  if (p < 2) throw DimensionError("fiber sphere needs p >= 2");
  if (p == 2) return circle_rule(circle_nodes);
  return sphere_rule(p - 1, level);
}

BilinearForm signature_form(int n, int p, int l) {
  if (l < 0 || l > n) throw std::invalid_argument("signature_form: need 0 <= l <= n");
  Matrix d = Matrix::Zero(n, n);
  for (int i = 0; i < n; ++i) d(i, i) = i < l ? 1.0 : -1.0;
  Vector xi = Vector::Zero(p);
  xi(0) = 1.0;
  return BilinearForm::from_scalar(d, xi);
}

double abs_power_moment(int n, const SphereRule& rule) {
  return integrate_region(rule, [n](const Vector& u) { return std::pow(std::abs(u(0)), n); });
}

double abs_power_moment_circle(int n) {
  return 2.0 * std::sqrt(std::numbers::pi) * std::tgamma(0.5 * (n + 1)) / std::tgamma(0.5 * n + 1.0);
}

double remark_bound(int n, int p, double delta, int l, const SphereRule& rule) {
  if (l < 1 || l > n) throw ConditionError("remark_bound: need 1 <= l <= n");
  if (rule.dim != p - 1) throw DimensionError("fiber rule must live on S^{p-1}");
  const double s = (n - 2.0 * l) * (n - 2.0 * l) - n;
  if (!(s > 0.0)) {
    throw ConditionError("remark_bound: (n-2l)^2 - n = " + std::to_string(s) + " is not positive");
  }
  if (delta * delta > s / n) {
    throw ConditionError("remark_bound: delta^2 exceeds ((n-2l)^2 - n)/n");
  }
  const double moment = abs_power_moment(n, rule);
  const double nn = n * (n - 1.0);
  return std::pow(2.0, 4.0 / n) * (8.0 * nn * nn - s * s) / (4.0 * nn * std::pow(moment, 4.0 / n));
}

double signature_form_ratio_closed_form(int n, int l, double moment) {
  const double s = (n - 2.0 * l) * (n - 2.0 * l) - n;
  const double nn = n * (n - 1.0);
  return 8.0 * (nn * nn - s * s) / (nn * std::pow(moment, 4.0 / n));
}

}  // namespace cgauge
