#pragma once

// Ratio functionals phi / psi^{4/n} on symmetric bilinear forms, their
// empirical minimization, the explicit diagonal upper bound, and the
// degenerating sequences showing the scalar-curvature constraint is needed.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "cgauge/quadrature.hpp"
#include "cgauge/tensor_core.hpp"

namespace cgauge {

/// Which curvature functional is being pinched.
///  * FixedK: phi_k = ||b.b - k g.g||^2 and the region is Omega(b) for k > 0,
///    the full fiber sphere for k <= 0.
///  * ScalNormalized: phi = ||b.b - sc(b)/(n(n-1)) g.g||^2 and the region is
///    Omega(b) for sc(b) > 0, the full fiber sphere otherwise.
struct Mode {
  enum class Kind { FixedK, ScalNormalized };
  Kind kind = Kind::ScalNormalized;
  double k = 0.0;

  static Mode fixed_k(double k) { return {Kind::FixedK, k}; }
  static Mode scal_normalized() { return {Kind::ScalNormalized, 0.0}; }

  /// phi and psi^{4/n} share degree 4, so the ratio ignores scale.
  bool scale_invariant() const { return kind == Kind::ScalNormalized || k == 0.0; }
  std::string label() const;
};

double phi_k(const BilinearForm& beta, double k);
double phi_scal(const BilinearForm& beta);

enum class RegionKind { OmegaSet, FullSphere };

struct RegionShape {
  RegionKind kind = RegionKind::FullSphere;
  int n = 0;
  int p = 0;
  int index_lo = 0;  ///< inclusive
  int index_hi = 0;  ///< inclusive
};

/// Region of the fiber sphere S^{p-1} attached to a form.
class Region {
 public:
  Region(RegionShape shape, BilinearForm beta, double tol);

  const RegionShape& shape() const { return shape_; }
  /// p <= Index(beta^sharp(u)) <= n - p for OmegaSet; always true otherwise.
  bool contains(const Vector& u) const;

 private:
  RegionShape shape_;
  BilinearForm beta_;
  double tol_;
};

/// Throws CodimensionError when the Omega set is selected and p is outside
/// [2, n/2].
Region region_of(const BilinearForm& beta, const Mode& mode, double tol = 1e-9);

/// int_region |det beta^sharp(u)| dS_u. The rule must live on S^{p-1}.
double psi(const BilinearForm& beta, const Region& region, const SphereRule& rule);

/// phi / psi^{4/n} without the scalar-curvature constraint.
/// Throws DegenerateRegion when psi = 0.
double ratio_value(const BilinearForm& beta, const Mode& mode, const SphereRule& rule);

/// ratio_value restricted to forms with |sc(beta)| >= delta^2 ||beta||^2;
/// throws ConstraintError otherwise.
double omega_ratio(const BilinearForm& beta, const Mode& mode, double delta, const SphereRule& rule);

/// True when |sc(beta)| >= delta^2 ||beta||^2 up to rounding slack.
bool satisfies_constraint(const BilinearForm& beta, double delta);

/// Default fiber rule on S^{p-1}: the circle rule for p = 2, a tensor rule
/// of the given level for p > 2.
SphereRule fiber_sphere_rule(int p, int circle_nodes, int level);

// Explicit diagonal candidate ------------------------------------------------

/// (sum_{i<=l} x_i y_i - sum_{i>l} x_i y_i) xi_1 in Hom(R^n x R^n, R^p).
BilinearForm signature_form(int n, int p, int l);

/// int_{S^{p-1}} |<u, xi>|^n dS_u by quadrature.
double abs_power_moment(int n, const SphereRule& rule);

/// Same moment on the circle in closed form: 2 sqrt(pi) Gamma((n+1)/2) / Gamma(n/2 + 1).
double abs_power_moment_circle(int n);

/// Upper bound on c(n, p, delta) from the signature form with l positive
/// entries, as displayed:
///   2^{4/n} (8 n^2 (n-1)^2 - s^2) / (4 n (n-1) I^{4/n}),  s = (n-2l)^2 - n,
/// with I the moment above. Throws ConditionError unless s > 0 and
/// delta^2 <= s / n.
double remark_bound(int n, int p, double delta, int l, const SphereRule& rule);

/// Direct ratio of the signature form in closed form:
///   8 (n^2 (n-1)^2 - s^2) / (n (n-1) I^{4/n}).
double signature_form_ratio_closed_form(int n, int l, double moment);

// Estimation ----------------------------------------------------------------

struct EstimateOptions {
  int n = 4;
  int p = 2;
  Mode mode = Mode::scal_normalized();
  double delta = 0.5;
  int budget = 20000;
  std::uint64_t seed = 42;
  int fiber_nodes = 128;
  int fiber_level = 6;
};

struct ConstantEstimate {
  EstimateOptions options;
  double estimated_min = 0.0;
  BilinearForm argmin_form;
  int sample_count = 0;       ///< objective evaluations spent
  int admissible_starts = 0;  ///< starts entering local search
  double min_admissible_sample = 0.0;
  double candidate_ratio = 0.0;  ///< best injected explicit start, +inf if none
  double wall_time_s = 0.0;
  std::string label = "empirical upper estimate";
};

/// Multistart Nelder-Mead over admissible forms. The result bounds the
/// true infimum from above. Throws CodimensionError for p outside [2, n/2],
/// std::invalid_argument for delta <= 0 or budget < 100, and EmptyDomain
/// when delta^2 exceeds the maximal |sc|/||beta||^2 = n - 1 or no admissible
/// start is found.
ConstantEstimate estimate_constant(const EstimateOptions& options);

// Degenerating sequences ----------------------------------------------------

/// Parameters of the sequence gamma_m: a = s/m, b = t/m, eta = 1/m and
/// theta = kappa_m * Theta with kappa_m fixed by the normalization.
struct SequencePattern {
  std::vector<double> s;  ///< n - 1 entries
  std::vector<double> t;  ///< p - 1 entries
  Matrix theta;           ///< (p - 1) x (n - 1)
};

/// s = (-1/2 x p, 2 x (n-1-p)), t = (1, ...), each Theta row
/// (-1 x p, 1/4 x (n-1-p)).
SequencePattern default_pattern(int n, int p);

struct SequenceRecord {
  int m = 0;
  double gamma_norm = 0.0;
  double sc_value = 0.0;
  double rho = 0.0;
  double sigma = 0.0;
  double phi_scal = 0.0;
  double psi = 0.0;
  double ratio = 0.0;
};

struct SequenceTerm {
  BilinearForm gamma;
  SequenceRecord record;
};

/// Builds gamma_m and its record. Throws PatternError when the pattern is
/// malformed, violates a normalization, or misses an index window.
SequenceTerm example_sequence(int m, int n, int p, const SequencePattern& pattern, const SphereRule& rule);

/// beta_m = sqrt(n(n-1)k / sc(gamma_m)) gamma_m. Throws SignError unless
/// k sc(gamma_m) > 0.
BilinearForm example_beta_sequence(int m, double k, int n, int p, const SequencePattern& pattern);

}  // namespace cgauge
