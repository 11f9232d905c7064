#include "cgauge/submanifold.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "cgauge/parallel.hpp"

namespace cgauge {

namespace {

// Offset of factor a inside R^{n+p}.
int block_offset(const std::vector<SphereFactor>& factors, std::size_t a) {
  int off = 0;
  for (std::size_t b = 0; b < a; ++b) off += factors[b].dim + 1;
  return off;
}

void check_point(const CatalogImmersion& imm, const ManifoldPoint& x) {
  if (x.factors.size() != imm.factors().size()) {
    throw DimensionError("point has " + std::to_string(x.factors.size()) + " factors, immersion has " +
                         std::to_string(imm.factors().size()));
  }
  for (std::size_t a = 0; a < x.factors.size(); ++a) {
    if (x.factors[a].size() != imm.factors()[a].dim + 1) throw DimensionError("factor size mismatch");
  }
}

}  // namespace

Matrix sphere_tangent_basis(const Vector& u) {
  const auto m = u.size();
  Vector v = u;
  v(0) -= 1.0;
  Matrix h = Matrix::Identity(m, m);
  const double vv = v.squaredNorm();
  if (vv > 1e-30) h -= (2.0 / vv) * v * v.transpose();
  return h.rightCols(m - 1);
}

CatalogImmersion CatalogImmersion::product_of_spheres(int n1, double r1, int n2, double r2) {
  if (n1 < 1 || n2 < 1) throw DimensionError("sphere factors need positive dimension");
  if (!(r1 > 0.0) || !(r2 > 0.0)) throw std::invalid_argument("radii must be positive");
  CatalogImmersion imm;
  imm.kind_ = ImmersionKind::ProductOfSpheres;
  imm.n_ = n1 + n2;
  imm.p_ = 2;
  imm.factors_ = {{n1, r1}, {n2, r2}};
  return imm;
}

CatalogImmersion CatalogImmersion::sphere_in_codim(int n, double r, int p) {
  if (n < 1 || p < 1) throw DimensionError("sphere_in_codim needs n >= 1 and p >= 1");
  if (!(r > 0.0)) throw std::invalid_argument("radius must be positive");
  CatalogImmersion imm;
  imm.kind_ = ImmersionKind::SphereInCodim;
  imm.n_ = n;
  imm.p_ = p;
  imm.factors_ = {{n, r}};
  return imm;
}

std::string CatalogImmersion::name() const {
  std::ostringstream os;
  for (std::size_t a = 0; a < factors_.size(); ++a) {
    if (a > 0) os << "x";
    os << "S^" << factors_[a].dim << "(" << factors_[a].radius << ")";
  }
  if (kind_ == ImmersionKind::SphereInCodim) os << " in R^" << ambient_dim();
  return os.str();
}

CatalogImmersion CatalogImmersion::scaled(double c) const {
  if (!(c > 0.0)) throw std::invalid_argument("scale must be positive");
  CatalogImmersion out = *this;
  for (auto& f : out.factors_) f.radius *= c;
  return out;
}

PoincarePolynomial CatalogImmersion::topology() const {
  std::vector<int> dims;
  for (const auto& f : factors_) dims.push_back(f.dim);
  return poincare(dims);
}

double CatalogImmersion::volume() const {
  double v = 1.0;
  for (const auto& f : factors_) v *= sphere_volume(f.dim, f.radius);
  return v;
}

ProductRule CatalogImmersion::manifold_rule(int level) const {
  std::vector<SphereRule> rules;
  std::vector<double> radii;
  for (const auto& f : factors_) {
    rules.push_back(sphere_rule(f.dim, level));
    radii.push_back(f.radius);
  }
  return ProductRule(std::move(rules), std::move(radii));
}

SphereRule CatalogImmersion::fiber_rule(const Resolution& res) const {
  if (p_ == 1) {
    SphereRule s0;
    s0.dim = 0;
    s0.nodes = {Vector::Constant(1, 1.0), Vector::Constant(1, -1.0)};
    s0.weights = {1.0, 1.0};
    return s0;
  }
  if (p_ == 2) return circle_rule(res.fiber_nodes);
  return sphere_rule(p_ - 1, res.fiber_level);
}

Vector CatalogImmersion::position(const ManifoldPoint& x) const {
  check_point(*this, x);
  Vector f = Vector::Zero(ambient_dim());
  for (std::size_t a = 0; a < factors_.size(); ++a) {
    f.segment(block_offset(factors_, a), factors_[a].dim + 1) = factors_[a].radius * x.factors[a];
  }
  return f;
}

Matrix CatalogImmersion::tangent_frame(const ManifoldPoint& x) const {
  check_point(*this, x);
  Matrix t = Matrix::Zero(ambient_dim(), n_);
  int col = 0;
  for (std::size_t a = 0; a < factors_.size(); ++a) {
    const int d = factors_[a].dim;
    t.block(block_offset(factors_, a), col, d + 1, d) = sphere_tangent_basis(x.factors[a]);
    col += d;
  }
  return t;
}

Matrix CatalogImmersion::normal_frame(const ManifoldPoint& x) const {
  check_point(*this, x);
  Matrix nf = Matrix::Zero(ambient_dim(), p_);
  for (std::size_t a = 0; a < factors_.size(); ++a) {
    nf.block(block_offset(factors_, a), static_cast<Eigen::Index>(a), factors_[a].dim + 1, 1) = x.factors[a];
  }
  // Flat normal directions of a sphere in codimension p.
  for (int b = static_cast<int>(factors_.size()); b < p_; ++b) {
    nf(n_ + b, b) = 1.0;
  }
  return nf;
}

Vector CatalogImmersion::second_fundamental_vector(const ManifoldPoint& x, const Vector& X,
                                                   const Vector& Y) const {
  check_point(*this, x);
  Vector out = Vector::Zero(ambient_dim());
  for (std::size_t a = 0; a < factors_.size(); ++a) {
    const int off = block_offset(factors_, a);
    const int len = factors_[a].dim + 1;
    const double xy = X.segment(off, len).dot(Y.segment(off, len));
    out.segment(off, len) = -(xy / factors_[a].radius) * x.factors[a];
  }
  return out;
}

BilinearForm CatalogImmersion::second_fundamental_form(const ManifoldPoint& x) const {
  const Matrix t = tangent_frame(x);
  const Matrix nf = normal_frame(x);
  std::vector<Matrix> comps(static_cast<std::size_t>(p_), Matrix::Zero(n_, n_));
  for (int i = 0; i < n_; ++i) {
    for (int j = i; j < n_; ++j) {
      const Vector a = second_fundamental_vector(x, t.col(i), t.col(j));
      for (int b = 0; b < p_; ++b) {
        const double v = a.dot(nf.col(b));
        comps[static_cast<std::size_t>(b)](i, j) = v;
        comps[static_cast<std::size_t>(b)](j, i) = v;
      }
    }
  }
  return BilinearForm(std::move(comps));
}

double CatalogImmersion::scal_closed_form() const {
  double s = 0.0;
  for (const auto& f : factors_) s += f.dim * (f.dim - 1) / (f.radius * f.radius);
  return s;
}

double CatalogImmersion::alpha_norm_sq_closed_form() const {
  double s = 0.0;
  for (const auto& f : factors_) s += f.dim / (f.radius * f.radius);
  return s;
}

QuadTensor CatalogImmersion::curvature_closed_form() const {
  QuadTensor r(n_);
  int start = 0;
  for (const auto& f : factors_) {
    const double c = 1.0 / (f.radius * f.radius);
    const int end = start + f.dim;
    for (int i = start; i < end; ++i) {
      for (int j = start; j < end; ++j) {
        for (int k = start; k < end; ++k) {
          for (int l = start; l < end; ++l) {
            r(i, j, k, l) = c * (static_cast<double>(i == l && j == k) - static_cast<double>(i == k && j == l));
          }
        }
      }
    }
    start = end;
  }
  return r;
}

double lipschitz_killing(const CatalogImmersion& imm, const ManifoldPoint& x, const Vector& xi) {
  const SymmetricOperator a = sharp(imm.second_fundamental_form(x), xi);
  const double det = a.matrix().determinant();
  return imm.dim() % 2 == 0 ? det : -det;
}

namespace {

// Entries 0..n: per-index integrals; entry n+1: the unrestricted integral.
std::vector<double> bundle_sums(const CatalogImmersion& imm, const Resolution& res) {
  const int n = imm.dim();
  const ProductRule manifold = imm.manifold_rule(res.manifold_level);
  const SphereRule fiber = imm.fiber_rule(res);
  const auto slots = static_cast<std::size_t>(n + 2);
  std::vector<std::vector<double>> per_point(slots, std::vector<double>(manifold.size(), 0.0));

  parallel_for(manifold.size(), [&](std::size_t i) {
    const BilinearForm alpha = imm.second_fundamental_form(manifold.point(i));
    std::vector<std::vector<double>> terms(slots, std::vector<double>(fiber.size(), 0.0));
    for (std::size_t j = 0; j < fiber.size(); ++j) {
      const Inertia in = inertia(contract(alpha, fiber.nodes[j]), kShapeIndexTol);
      const double v = fiber.weights[j] * std::abs(in.determinant);
      terms[static_cast<std::size_t>(in.negative)][j] = v;
      terms[slots - 1][j] = v;
    }
    const double w = manifold.weight(i);
    for (std::size_t s = 0; s < slots; ++s) per_point[s][i] = w * pairwise_sum(terms[s]);
  });

  std::vector<double> out(slots);
  for (std::size_t s = 0; s < slots; ++s) out[s] = pairwise_sum(per_point[s]);
  return out;
}

FunctionalValue make_value(std::string name, double value, const CatalogImmersion& imm,
                           const Resolution& res, bool with_fiber) {
  FunctionalValue fv;
  fv.name = std::move(name);
  fv.value = value;
  fv.immersion = imm.name();
  fv.manifold_nodes = imm.manifold_rule(res.manifold_level).size();
  fv.fiber_nodes = with_fiber ? imm.fiber_rule(res).size() : 0;
  return fv;
}

}  // namespace

std::vector<double> index_bundle_integrals(const CatalogImmersion& imm, const Resolution& res) {
  std::vector<double> all = bundle_sums(imm, res);
  all.pop_back();
  return all;
}

double bundle_abs_det_integral(const CatalogImmersion& imm, const Resolution& res) {
  return bundle_sums(imm, res).back();
}

FunctionalValue total_abs_curvature(const CatalogImmersion& imm, const Resolution& res) {
  const double v = bundle_abs_det_integral(imm, res) / sphere_volume(imm.ambient_dim() - 1);
  return make_value("tau", v, imm, res, true);
}

FunctionalValue total_curvature_index(const CatalogImmersion& imm, int i, const Resolution& res) {
  if (i < 0 || i > imm.dim()) throw std::invalid_argument("index must lie in [0, n]");
  const double v = index_bundle_integrals(imm, res)[static_cast<std::size_t>(i)] /
                   sphere_volume(imm.ambient_dim() - 1);
  return make_value("tau_" + std::to_string(i), v, imm, res, true);
}

FunctionalValue curvature_functional(const CatalogImmersion& imm, CurvatureMode mode, double k,
                                     const Resolution& res) {
  const int n = imm.dim();
  if (n < 2) throw DimensionError("curvature_functional needs n >= 2");
  const QuadTensor r1 = r1_tensor(n);
  const ProductRule manifold = imm.manifold_rule(res.manifold_level);
  const double v = integrate_product(manifold, [&](const ManifoldPoint& x) {
    const QuadTensor r = gauss_curvature(imm.second_fundamental_form(x));
    const double kappa = mode == CurvatureMode::FixedK ? k : scal(r) / (n * (n - 1.0));
    return std::pow((r - r1 * kappa).norm_squared(), n / 4.0);
  });
  return make_value(mode == CurvatureMode::FixedK ? "fixed_k_functional" : "scal_normalized_functional", v,
                    imm, res, false);
}

double curvature_functional_closed_form(const CatalogImmersion& imm, CurvatureMode mode, double k) {
  const int n = imm.dim();
  if (n < 2) throw DimensionError("curvature_functional needs n >= 2");
  const double kappa = mode == CurvatureMode::FixedK ? k : imm.scal_closed_form() / (n * (n - 1.0));
  const auto& f = imm.factors();
  double inner = 0.0;
  for (const auto& fa : f) {
    const double c = 1.0 / (fa.radius * fa.radius) - kappa;
    inner += fa.dim * (fa.dim - 1.0) * c * c;
  }
  if (f.size() == 2) inner += 2.0 * f[0].dim * f[1].dim * kappa * kappa;
  return std::pow(2.0 * inner, n / 4.0) * imm.volume();
}

double pinch_ratio(const CatalogImmersion& imm, const ManifoldPoint& x) {
  const BilinearForm alpha = imm.second_fundamental_form(x);
  const double nsq = alpha.norm_squared();
  if (nsq < 1e-14) throw DegeneratePoint("pinch_ratio: second fundamental form vanishes");
  return std::abs(sc(alpha)) / nsq;
}

}  // namespace cgauge
