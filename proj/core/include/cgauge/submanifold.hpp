#pragma once

// Catalog immersions with closed-form geometry: a product of two round
// spheres S^{n1}(r1) x S^{n2}(r2) in R^{n1+1} x R^{n2+1}, and a round sphere
// S^n(r) in R^{n+1} x R^{p-1}. Normals of sphere factors point outward.

#include <string>
#include <vector>

#include "cgauge/quadrature.hpp"
#include "cgauge/tensor_core.hpp"
#include "cgauge/topology.hpp"

namespace cgauge {

struct SphereFactor {
  int dim = 0;
  double radius = 1.0;
};

enum class ImmersionKind { ProductOfSpheres, SphereInCodim };

/// Quadrature resolution for manifold, fiber and ambient-sphere integrals.
struct Resolution {
  int manifold_level = 3;
  int fiber_nodes = 256;  ///< circle nodes when p = 2
  int fiber_level = 6;    ///< sphere_rule level when p > 2
  int ambient_level = 3;
};

class CatalogImmersion {
 public:
  static CatalogImmersion product_of_spheres(int n1, double r1, int n2, double r2);
  static CatalogImmersion sphere_in_codim(int n, double r, int p);

  ImmersionKind kind() const { return kind_; }
  int dim() const { return n_; }
  int codim() const { return p_; }
  int ambient_dim() const { return n_ + p_; }
  const std::vector<SphereFactor>& factors() const { return factors_; }
  std::string name() const;

  /// Same immersion with every radius multiplied by c.
  CatalogImmersion scaled(double c) const;

  PoincarePolynomial topology() const;
  double volume() const;

  ProductRule manifold_rule(int level) const;
  SphereRule fiber_rule(const Resolution& res) const;

  Vector position(const ManifoldPoint& x) const;
  /// (n+p) x n orthonormal tangent frame.
  Matrix tangent_frame(const ManifoldPoint& x) const;
  /// (n+p) x p orthonormal normal frame. Column 0 is the outward normal of
  /// the first sphere factor, column 1 that of the second factor for
  /// products; flat directions follow for spheres in codimension p.
  Matrix normal_frame(const ManifoldPoint& x) const;

  /// Ambient vector alpha(X, Y) for tangent vectors X, Y given in R^{n+p}.
  Vector second_fundamental_vector(const ManifoldPoint& x, const Vector& X, const Vector& Y) const;

  /// alpha in the adapted frames: B_b(i, j) = <alpha(t_i, t_j), N_b>.
  BilinearForm second_fundamental_form(const ManifoldPoint& x) const;

  // Closed forms (constant over M for the catalog).
  double scal_closed_form() const;
  double alpha_norm_sq_closed_form() const;
  /// Curvature tensor with sectional curvature 1/r_a^2 inside factor a and
  /// zero on mixed planes, in the adapted tangent frame.
  QuadTensor curvature_closed_form() const;

 private:
  ImmersionKind kind_ = ImmersionKind::ProductOfSpheres;
  int n_ = 0;
  int p_ = 0;
  std::vector<SphereFactor> factors_;
};

/// Orthonormal basis of the complement of the unit vector u in R^{d+1},
/// from the Householder reflection exchanging e_0 and u. Returns (d+1) x d.
Matrix sphere_tangent_basis(const Vector& u);

struct FunctionalValue {
  std::string name;
  double value = 0.0;
  std::string immersion;
  std::size_t manifold_nodes = 0;
  std::size_t fiber_nodes = 0;
};

/// (-1)^n det A_xi for a unit normal xi given in the normal frame.
double lipschitz_killing(const CatalogImmersion& imm, const ManifoldPoint& x, const Vector& xi);

/// Unnormalized bundle integrals int_{U^i N} |det A_xi| dSigma for i = 0..n.
std::vector<double> index_bundle_integrals(const CatalogImmersion& imm, const Resolution& res);

/// int_{UN} |det A_xi| dSigma.
double bundle_abs_det_integral(const CatalogImmersion& imm, const Resolution& res);

/// tau(f) = (1 / Vol(S^{n+p-1})) int_{UN} |det A_xi| dSigma.
FunctionalValue total_abs_curvature(const CatalogImmersion& imm, const Resolution& res);

/// tau_i, the same integral restricted to shape operators of index i.
FunctionalValue total_curvature_index(const CatalogImmersion& imm, int i, const Resolution& res);

enum class CurvatureMode { FixedK, ScalNormalized };

/// int_M ||R - kappa R_1||^{n/2} dM with kappa = k or scal / (n(n-1)).
FunctionalValue curvature_functional(const CatalogImmersion& imm, CurvatureMode mode, double k,
                                     const Resolution& res);

/// Pointwise ||R - kappa R_1||^2 = 2 [sum_a n_a (n_a - 1)(1/r_a^2 - kappa)^2
/// + 2 n_1 n_2 kappa^2] is constant on catalog immersions, so the functional
/// is that value to the power n/4 times the volume.
double curvature_functional_closed_form(const CatalogImmersion& imm, CurvatureMode mode, double k);

/// |scal(x)| / ||alpha(x)||^2. Throws DegeneratePoint when alpha(x) = 0.
double pinch_ratio(const CatalogImmersion& imm, const ManifoldPoint& x);

/// Index tolerance used for shape operators throughout.
inline constexpr double kShapeIndexTol = 1e-9;

}  // namespace cgauge
