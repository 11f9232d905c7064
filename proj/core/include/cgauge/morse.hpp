#pragma once

// Critical points of height functions h_u(x) = <f(x), u> on catalog
// immersions, and the integral identities relating them to the shape
// operators on the unit normal bundle.

#include <vector>

#include "cgauge/report.hpp"
#include "cgauge/submanifold.hpp"

namespace cgauge {

struct CriticalPoint {
  ManifoldPoint point;
  int index = 0;
  double height = 0.0;
  double hessian_determinant = 0.0;
};

struct MorseProfile {
  Vector direction;
  std::vector<CriticalPoint> points;
  std::vector<int> counts;  ///< mu_0 .. mu_n

  int alternating_sum() const;
  int total() const;
};

/// Projections of u below this length on a sphere factor are non-generic.
inline constexpr double kGenericityTol = 1e-9;

/// Analytic enumeration. Throws NormalizationError unless |u| = 1 within
/// 1e-10 and GenericityError when u is orthogonal to a sphere factor.
MorseProfile height_critical_points(const CatalogImmersion& imm, const Vector& u);

/// Hessian of h_u at x in the adapted tangent frame, which is the shape
/// operator A_{u^N} = sum_b <u, N_b> B_b.
Matrix height_hessian(const CatalogImmersion& imm, const ManifoldPoint& x, const Vector& u);

/// height_critical_points with the genericity retry: a rejected direction
/// is moved by 1e-7 along a fixed pseudo-random direction and renormalized.
/// perturbed (optional) reports whether the retry path was taken.
MorseProfile generic_profile(const CatalogImmersion& imm, const Vector& u, bool* perturbed = nullptr);

/// int_{S^{n+p-1}} mu_i(u) dS_u for i = 0..n, quadrature at ambient_level.
std::vector<double> morse_count_integrals(const CatalogImmersion& imm, const Resolution& res);

VerificationReport chern_lashof_check(const CatalogImmersion& imm, const Resolution& res);
VerificationReport shiohama_xu_check(const CatalogImmersion& imm, int i, const Resolution& res);

/// mu_i(u) >= beta_i and sum (-1)^i mu_i(u) = chi(M) over `directions`
/// deterministic pseudo-random directions.
VerificationReport morse_inequality_check(const CatalogImmersion& imm, int directions = 64);

/// Deterministic pseudo-random unit vectors in R^dim.
std::vector<Vector> sample_directions(int dim, int count, unsigned long long seed);

}  // namespace cgauge
