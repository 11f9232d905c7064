#pragma once

// Algebra of symmetric W-valued bilinear forms on V = R^n (W = R^p) and of
// (0,4)-tensors of curvature type built from them.
//
// Conventions used throughout the library:
//  * the norm of a (0,4)-tensor is the plain Frobenius norm over all n^4
//    components;
//  * scal(R) = sum_{i,j} R(e_i, e_j, e_j, e_i), so that the Gauss-equation
//    tensor of the unit sphere has scal = +n(n-1).

#include <span>
#include <vector>

#include <Eigen/Dense>

#include "cgauge/errors.hpp"

namespace cgauge {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// Symmetric bilinear form V x V -> W, stored as one symmetric n x n matrix
/// per orthonormal basis vector of W: B_a = beta^sharp(xi_a).
class BilinearForm {
 public:
  BilinearForm() = default;

  /// Zero form.
  BilinearForm(int n, int p);

  /// Throws DimensionError on inconsistent sizes and std::invalid_argument
  /// when a component is not exactly symmetric.
  explicit BilinearForm(std::vector<Matrix> components);

  /// phi(x,y) * w for a real symmetric form phi and a vector w in W.
  static BilinearForm from_scalar(const Matrix& phi, const Vector& w);

  /// Builds a form from the packed upper triangles of each component
  /// (row-major i <= j), the layout used by the optimizer.
  static BilinearForm unpack(int n, int p, std::span<const double> packed);
  std::vector<double> pack() const;
  static int packed_size(int n, int p) { return p * n * (n + 1) / 2; }

  int dim() const { return n_; }
  int codim() const { return static_cast<int>(components_.size()); }

  const Matrix& component(int a) const { return components_[static_cast<std::size_t>(a)]; }
  std::span<const Matrix> components() const { return components_; }

  /// beta(e_i, e_j) as a W-vector.
  Vector at(int i, int j) const;
  Vector operator()(const Vector& x, const Vector& y) const;

  double norm_squared() const;
  double norm() const;

  /// Change of orthonormal basis of V: B_a -> Q^T B_a Q.
  BilinearForm rotated(const Matrix& q) const;
  /// Change of orthonormal basis of W: components mix through Q.
  BilinearForm rotated_normal(const Matrix& q) const;

  BilinearForm operator*(double t) const;
  BilinearForm operator+(const BilinearForm& other) const;
  BilinearForm operator-(const BilinearForm& other) const;

 private:
  int n_ = 0;
  std::vector<Matrix> components_;
};

inline BilinearForm operator*(double t, const BilinearForm& b) { return b * t; }

/// Real (0,4)-tensor on R^n, components T(i,j,k,l) stored densely.
class QuadTensor {
 public:
  QuadTensor() = default;
  explicit QuadTensor(int n);

  int dim() const { return n_; }

  double& operator()(int i, int j, int k, int l) { return data_[offset(i, j, k, l)]; }
  double operator()(int i, int j, int k, int l) const { return data_[offset(i, j, k, l)]; }

  std::span<const double> data() const { return data_; }

  double norm_squared() const;
  double norm() const;

  QuadTensor operator*(double t) const;
  QuadTensor operator+(const QuadTensor& other) const;
  QuadTensor operator-(const QuadTensor& other) const;

  /// max |T(x,y,z,w) + T(y,z,x,w) + T(z,x,y,w)| over basis indices.
  double bianchi_defect() const;

 private:
  std::size_t offset(int i, int j, int k, int l) const {
    const auto n = static_cast<std::size_t>(n_);
    return ((static_cast<std::size_t>(i) * n + static_cast<std::size_t>(j)) * n +
            static_cast<std::size_t>(k)) * n + static_cast<std::size_t>(l);
  }

  int n_ = 0;
  std::vector<double> data_;
};

/// A self-adjoint endomorphism of V.
class SymmetricOperator {
 public:
  SymmetricOperator() = default;
  /// Throws std::invalid_argument unless m is square and exactly symmetric.
  explicit SymmetricOperator(Matrix m);

  int dim() const { return static_cast<int>(m_.rows()); }
  const Matrix& matrix() const { return m_; }
  Vector eigenvalues() const;

 private:
  Matrix m_;
};

/// Orthonormal basis (as matrix columns) of a subspace of R^n.
class Subspace {
 public:
  Subspace() = default;
  Subspace(int ambient_dim, Matrix basis);

  int ambient_dim() const { return n_; }
  int dim() const { return static_cast<int>(basis_.cols()); }
  const Matrix& basis() const { return basis_; }

  /// Distance from v to the subspace.
  double distance(const Vector& v) const;

 private:
  int n_ = 0;
  Matrix basis_;
};

/// Number of negative, zero and positive eigenvalues plus the determinant.
struct Inertia {
  int negative = 0;
  int zero = 0;
  int positive = 0;
  double determinant = 0.0;
};

Inertia inertia(const Matrix& symmetric, double tol);

QuadTensor kn_scalar(const Matrix& phi, const Matrix& psi);
QuadTensor kn_vector(const BilinearForm& beta, const BilinearForm& gamma);

bool is_flat(const BilinearForm& beta, double tol);

Subspace nullity_space(const BilinearForm& beta, double tol);

/// beta^sharp(u) = sum_a u_a B_a. Throws NormalizationError unless |u| = 1
/// within 1e-10.
SymmetricOperator sharp(const BilinearForm& beta, const Vector& u);

/// Same contraction without the unit-length precondition.
Matrix contract(const BilinearForm& beta, const Vector& w);

/// Eigenvalues below -tol * max(1, ||S||_F) are counted as negative.
int index_of(const SymmetricOperator& s, double tol);

/// Algebraic scalar curvature sum_{i,j} <b(e_i,e_i), b(e_j,e_j)> - |b(e_i,e_j)|^2.
double sc(const BilinearForm& beta);

/// Gauss equation R = -1/2 alpha . alpha.
QuadTensor gauss_curvature(const BilinearForm& alpha);

/// R_1 = -1/2 g . g, the curvature tensor of the unit sphere.
QuadTensor r1_tensor(int n);

double scal(const QuadTensor& r);

struct LemmaDecomposition {
  Vector xi;          ///< unit vector in W
  Subspace v1;        ///< beta(x, y) = sqrt(k) <x,y> xi for y in v1
  double residual = 0.0;  ///< upper bound on max |beta(x,y) - sqrt(k)<x,y>xi|, unit x, y in v1
};

/// Recovers xi and V1 for a form with beta . beta = k g . g, k > 0, p <= n - 2.
///
/// The candidate xi is read off the dominant eigenvalue cluster of
/// beta^sharp(u) for a few fixed generic u; V1 is then the kernel of the
/// stacked residual form beta - sqrt(k) <,> xi.
///
/// Throws KSignError for k <= 0, HypothesisViolation when
/// ||beta.beta - k g.g|| > tol * max(1, ||beta||^2) or when no admissible
/// decomposition is found, DimensionError when p > n - 2.
LemmaDecomposition lemma_decompose(const BilinearForm& beta, double k, double tol);

}  // namespace cgauge
