#include "cgauge/tensor_core.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace cgauge {

namespace {

void require_symmetric(const Matrix& m, const char* what) {
  if (m.rows() != m.cols()) {
    throw DimensionError(std::string(what) + ": matrix is not square");
  }
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = i + 1; j < m.cols(); ++j) {
      if (m(i, j) != m(j, i)) {
        throw std::invalid_argument(std::string(what) + ": matrix is not symmetric");
      }
    }
  }
}

void require_same_shape(const BilinearForm& a, const BilinearForm& b) {
  if (a.dim() != b.dim() || a.codim() != b.codim()) {
    throw DimensionError("bilinear forms differ in (n, p): (" + std::to_string(a.dim()) + ", " +
                         std::to_string(a.codim()) + ") vs (" + std::to_string(b.dim()) + ", " +
                         std::to_string(b.codim()) + ")");
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// BilinearForm

BilinearForm::BilinearForm(int n, int p) : n_(n) {
  if (n < 1 || p < 1) throw DimensionError("bilinear form needs n >= 1 and p >= 1");
  components_.assign(static_cast<std::size_t>(p), Matrix::Zero(n, n));
}

BilinearForm::BilinearForm(std::vector<Matrix> components) : components_(std::move(components)) {
  if (components_.empty()) throw DimensionError("bilinear form needs at least one component");
  n_ = static_cast<int>(components_.front().rows());
  for (const auto& c : components_) {
    if (c.rows() != n_ || c.cols() != n_) {
      throw DimensionError("bilinear form components must all be n x n");
    }
    require_symmetric(c, "BilinearForm");
  }
}

BilinearForm BilinearForm::from_scalar(const Matrix& phi, const Vector& w) {
  require_symmetric(phi, "BilinearForm::from_scalar");
  std::vector<Matrix> comps;
  comps.reserve(static_cast<std::size_t>(w.size()));
  for (Eigen::Index a = 0; a < w.size(); ++a) comps.emplace_back(w(a) * phi);
  return BilinearForm(std::move(comps));
}

BilinearForm BilinearForm::unpack(int n, int p, std::span<const double> packed) {
  if (static_cast<int>(packed.size()) != packed_size(n, p)) {
    throw DimensionError("packed coefficient vector has the wrong length");
  }
  std::vector<Matrix> comps;
  std::size_t pos = 0;
  for (int a = 0; a < p; ++a) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) {
      for (int j = i; j < n; ++j) {
        m(i, j) = packed[pos];
        m(j, i) = packed[pos];
        ++pos;
      }
    }
    comps.push_back(std::move(m));
  }
  return BilinearForm(std::move(comps));
}

std::vector<double> BilinearForm::pack() const {
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(packed_size(n_, codim())));
  for (const auto& m : components_) {
    for (int i = 0; i < n_; ++i) {
      for (int j = i; j < n_; ++j) out.push_back(m(i, j));
    }
  }
  return out;
}

Vector BilinearForm::at(int i, int j) const {
  Vector v(codim());
  for (int a = 0; a < codim(); ++a) v(a) = components_[static_cast<std::size_t>(a)](i, j);
  return v;
}

Vector BilinearForm::operator()(const Vector& x, const Vector& y) const {
  if (x.size() != n_ || y.size() != n_) throw DimensionError("argument vector has wrong size");
  Vector v(codim());
  for (int a = 0; a < codim(); ++a) v(a) = x.dot(components_[static_cast<std::size_t>(a)] * y);
  return v;
}

double BilinearForm::norm_squared() const {
  double s = 0.0;
  for (const auto& m : components_) s += m.squaredNorm();
  return s;
}

double BilinearForm::norm() const { return std::sqrt(norm_squared()); }

BilinearForm BilinearForm::rotated(const Matrix& q) const {
  if (q.rows() != n_ || q.cols() != n_) throw DimensionError("rotation has wrong size");
  std::vector<Matrix> comps;
  for (const auto& m : components_) {
    Matrix r = q.transpose() * m * q;
    // Restore exact symmetry lost to rounding.
    Matrix sym = 0.5 * (r + r.transpose());
    comps.push_back(std::move(sym));
  }
  return BilinearForm(std::move(comps));
}

BilinearForm BilinearForm::rotated_normal(const Matrix& q) const {
  const int p = codim();
  if (q.rows() != p || q.cols() != p) throw DimensionError("normal rotation has wrong size");
  std::vector<Matrix> comps(static_cast<std::size_t>(p), Matrix::Zero(n_, n_));
  for (int b = 0; b < p; ++b) {
    for (int a = 0; a < p; ++a) comps[static_cast<std::size_t>(b)] += q(a, b) * component(a);
  }
  return BilinearForm(std::move(comps));
}

BilinearForm BilinearForm::operator*(double t) const {
  std::vector<Matrix> comps;
  for (const auto& m : components_) comps.emplace_back(t * m);
  return BilinearForm(std::move(comps));
}

BilinearForm BilinearForm::operator+(const BilinearForm& other) const {
  require_same_shape(*this, other);
  std::vector<Matrix> comps;
  for (int a = 0; a < codim(); ++a) comps.emplace_back(component(a) + other.component(a));
  return BilinearForm(std::move(comps));
}

BilinearForm BilinearForm::operator-(const BilinearForm& other) const {
  require_same_shape(*this, other);
  std::vector<Matrix> comps;
  for (int a = 0; a < codim(); ++a) comps.emplace_back(component(a) - other.component(a));
  return BilinearForm(std::move(comps));
}

// ---------------------------------------------------------------------------
// QuadTensor

QuadTensor::QuadTensor(int n) : n_(n) {
  if (n < 1) throw DimensionError("tensor dimension must be positive");
  const auto nn = static_cast<std::size_t>(n);
  data_.assign(nn * nn * nn * nn, 0.0);
}

double QuadTensor::norm_squared() const {
  double s = 0.0;
  for (double v : data_) s += v * v;
  return s;
}

double QuadTensor::norm() const { return std::sqrt(norm_squared()); }

QuadTensor QuadTensor::operator*(double t) const {
  QuadTensor out(n_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = t * data_[i];
  return out;
}

QuadTensor QuadTensor::operator+(const QuadTensor& other) const {
  if (other.n_ != n_) throw DimensionError("tensor dimension mismatch");
  QuadTensor out(n_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] + other.data_[i];
  return out;
}

QuadTensor QuadTensor::operator-(const QuadTensor& other) const {
  if (other.n_ != n_) throw DimensionError("tensor dimension mismatch");
  QuadTensor out(n_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] - other.data_[i];
  return out;
}

double QuadTensor::bianchi_defect() const {
  double worst = 0.0;
  for (int x = 0; x < n_; ++x)
    for (int y = 0; y < n_; ++y)
      for (int z = 0; z < n_; ++z)
        for (int w = 0; w < n_; ++w) {
          const double s = (*this)(x, y, z, w) + (*this)(y, z, x, w) + (*this)(z, x, y, w);
          worst = std::max(worst, std::abs(s));
        }
  return worst;
}

// ---------------------------------------------------------------------------
// SymmetricOperator / Subspace

SymmetricOperator::SymmetricOperator(Matrix m) : m_(std::move(m)) {
  require_symmetric(m_, "SymmetricOperator");
}

Vector SymmetricOperator::eigenvalues() const {
  Eigen::SelfAdjointEigenSolver<Matrix> es(m_, Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

Subspace::Subspace(int ambient_dim, Matrix basis) : n_(ambient_dim), basis_(std::move(basis)) {
  if (basis_.cols() > 0 && basis_.rows() != ambient_dim) {
    throw DimensionError("subspace basis vectors have the wrong length");
  }
  if (basis_.cols() == 0) basis_.resize(ambient_dim, 0);
}

double Subspace::distance(const Vector& v) const {
  if (dim() == 0) return v.norm();
  return (v - basis_ * (basis_.transpose() * v)).norm();
}

// ---------------------------------------------------------------------------
// Operations

Inertia inertia(const Matrix& symmetric, double tol) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(symmetric, Eigen::EigenvaluesOnly);
  const Vector& ev = es.eigenvalues();
  const double cut = tol * std::max(1.0, symmetric.norm());
  Inertia out;
  out.determinant = 1.0;
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    out.determinant *= ev(i);
    if (ev(i) < -cut) {
      ++out.negative;
    } else if (ev(i) > cut) {
      ++out.positive;
    } else {
      ++out.zero;
    }
  }
  return out;
}

QuadTensor kn_scalar(const Matrix& phi, const Matrix& psi) {
  require_symmetric(phi, "kn_scalar");
  require_symmetric(psi, "kn_scalar");
  if (phi.rows() != psi.rows()) throw DimensionError("kn_scalar: forms differ in dimension");
  const int n = static_cast<int>(phi.rows());
  QuadTensor t(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          t(i, j, k, l) = phi(i, k) * psi(j, l) + phi(j, l) * psi(i, k) - phi(i, l) * psi(j, k) -
                          phi(j, k) * psi(i, l);
        }
  return t;
}

QuadTensor kn_vector(const BilinearForm& beta, const BilinearForm& gamma) {
  require_same_shape(beta, gamma);
  const int n = beta.dim();
  const int p = beta.codim();
  // <beta(e_a, e_b), gamma(e_c, e_d)> for all index pairs.
  const auto nn = static_cast<std::size_t>(n * n);
  std::vector<double> inner(nn * nn, 0.0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          double s = 0.0;
          for (int q = 0; q < p; ++q) s += beta.component(q)(a, b) * gamma.component(q)(c, d);
          inner[static_cast<std::size_t>(a * n + b) * nn + static_cast<std::size_t>(c * n + d)] = s;
        }
  auto ip = [&](int a, int b, int c, int d) {
    return inner[static_cast<std::size_t>(a * n + b) * nn + static_cast<std::size_t>(c * n + d)];
  };
  QuadTensor t(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          t(i, j, k, l) = ip(i, k, j, l) + ip(j, l, i, k) - ip(i, l, j, k) - ip(j, k, i, l);
        }
  return t;
}

bool is_flat(const BilinearForm& beta, double tol) {
  return kn_vector(beta, beta).norm() <= tol * std::max(1.0, beta.norm_squared());
}

Subspace nullity_space(const BilinearForm& beta, double tol) {
  const int n = beta.dim();
  const int p = beta.codim();
  Matrix stacked(p * n, n);
  for (int a = 0; a < p; ++a) stacked.block(a * n, 0, n, n) = beta.component(a);
  Eigen::JacobiSVD<Matrix> svd(stacked, Eigen::ComputeFullV);
  const Vector& sv = svd.singularValues();
  const double cut = tol * (sv.size() > 0 ? sv(0) : 0.0);
  std::vector<int> kernel_cols;
  for (int i = 0; i < n; ++i) {
    const double s = i < sv.size() ? sv(i) : 0.0;
    if (s <= cut) kernel_cols.push_back(i);
  }
  Matrix basis(n, static_cast<Eigen::Index>(kernel_cols.size()));
  for (std::size_t c = 0; c < kernel_cols.size(); ++c) {
    basis.col(static_cast<Eigen::Index>(c)) = svd.matrixV().col(kernel_cols[c]);
  }
  return Subspace(n, std::move(basis));
}

Matrix contract(const BilinearForm& beta, const Vector& w) {
  if (w.size() != beta.codim()) throw DimensionError("normal vector has the wrong length");
  Matrix s = Matrix::Zero(beta.dim(), beta.dim());
  for (int a = 0; a < beta.codim(); ++a) s += w(a) * beta.component(a);
  return s;
}

SymmetricOperator sharp(const BilinearForm& beta, const Vector& u) {
  if (u.size() != beta.codim()) throw DimensionError("sharp: direction has the wrong length");
  if (std::abs(u.norm() - 1.0) > 1e-10) {
    throw NormalizationError("sharp: direction is not a unit vector");
  }
  return SymmetricOperator(contract(beta, u));
}

int index_of(const SymmetricOperator& s, double tol) { return inertia(s.matrix(), tol).negative; }

double sc(const BilinearForm& beta) {
  const int n = beta.dim();
  double total = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      double diag = 0.0;
      double off = 0.0;
      for (const auto& m : beta.components()) {
        diag += m(i, i) * m(j, j);
        off += m(i, j) * m(i, j);
      }
      total += diag - off;
    }
  }
  return total;
}

QuadTensor gauss_curvature(const BilinearForm& alpha) { return kn_vector(alpha, alpha) * -0.5; }

QuadTensor r1_tensor(int n) {
  if (n < 2) throw DimensionError("r1_tensor needs n >= 2");
  return kn_scalar(Matrix::Identity(n, n), Matrix::Identity(n, n)) * -0.5;
}

double scal(const QuadTensor& r) {
  const int n = r.dim();
  double s = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) s += r(i, j, j, i);
  return s;
}

}  // namespace cgauge
