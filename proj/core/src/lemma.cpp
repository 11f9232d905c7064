#include <algorithm>
#include <cmath>
#include <optional>

#include "cgauge/tensor_core.hpp"

namespace cgauge {

namespace {

// Fixed directions in W used to probe the eigenvalue clusters of beta^sharp.
std::vector<Vector> probe_directions(int p) {
  std::vector<Vector> dirs;
  for (int trial = 0; trial < 3; ++trial) {
    Vector u(p);
    for (int a = 0; a < p; ++a) {
      // Irrational-looking weights keep the probes away from coordinate planes.
      u(a) = std::sin(1.0 + 0.7548776662 * (a + 1) + 2.3 * trial * (a + 1)) + 0.1 * (a + 1);
    }
    dirs.push_back(u.normalized());
  }
  return dirs;
}

std::optional<LemmaDecomposition> try_cluster(const BilinearForm& beta, double root_k,
                                              const Matrix& cluster_vectors, double tol,
                                              double scale) {
  const int n = beta.dim();
  const int p = beta.codim();
  const auto m = static_cast<double>(cluster_vectors.cols());
  Vector xi(p);
  for (int a = 0; a < p; ++a) {
    xi(a) = (cluster_vectors.transpose() * beta.component(a) * cluster_vectors).trace() /
            (m * root_k);
  }
  const double len = xi.norm();
  if (std::abs(len - 1.0) > 1e-6) return std::nullopt;
  xi /= len;

  Matrix stacked(p * n, n);
  for (int a = 0; a < p; ++a) {
    stacked.block(a * n, 0, n, n) = beta.component(a) - root_k * xi(a) * Matrix::Identity(n, n);
  }
  Eigen::JacobiSVD<Matrix> svd(stacked, Eigen::ComputeFullV);
  const Vector& sv = svd.singularValues();
  const double cut = tol * scale;
  std::vector<int> cols;
  double residual_sq = 0.0;
  for (int i = 0; i < n; ++i) {
    if (sv(i) <= cut) {
      cols.push_back(i);
      residual_sq += sv(i) * sv(i);
    }
  }
  Matrix basis(n, static_cast<Eigen::Index>(cols.size()));
  for (std::size_t c = 0; c < cols.size(); ++c) {
    basis.col(static_cast<Eigen::Index>(c)) = svd.matrixV().col(cols[c]);
  }
  LemmaDecomposition out;
  out.xi = xi;
  out.v1 = Subspace(n, std::move(basis));
  out.residual = std::sqrt(residual_sq);
  return out;
}

}  // namespace

LemmaDecomposition lemma_decompose(const BilinearForm& beta, double k, double tol) {
  const int n = beta.dim();
  const int p = beta.codim();
  if (!(k > 0.0)) throw KSignError("lemma_decompose: k must be positive");
  if (p > n - 2) throw DimensionError("lemma_decompose: requires dim W <= dim V - 2");

  const Matrix g = Matrix::Identity(n, n);
  const double hyp = (kn_vector(beta, beta) - kn_scalar(g, g) * k).norm();
  if (hyp > tol * std::max(1.0, beta.norm_squared())) {
    throw HypothesisViolation("lemma_decompose: beta.beta differs from k g.g by " +
                              std::to_string(hyp));
  }

  const double root_k = std::sqrt(k);
  const double scale = std::max(1.0, beta.norm());
  const int min_dim = n - p + 1;

  std::optional<LemmaDecomposition> best;
  for (const Vector& u : probe_directions(p)) {
    const Matrix s = contract(beta, u);
    Eigen::SelfAdjointEigenSolver<Matrix> es(s);
    const Vector& ev = es.eigenvalues();
    const double cluster_tol = std::max(1e-8, std::sqrt(tol)) * std::max(1.0, ev.cwiseAbs().maxCoeff());

    // Eigenvalues come sorted; split into clusters of nearly equal values.
    int start = 0;
    while (start < n) {
      int end = start + 1;
      while (end < n && ev(end) - ev(end - 1) <= cluster_tol) ++end;
      if (end - start >= min_dim) {
        const Matrix vecs = es.eigenvectors().middleCols(start, end - start);
        auto cand = try_cluster(beta, root_k, vecs, tol, scale);
        if (cand && cand->v1.dim() >= min_dim) {
          if (!best || cand->v1.dim() > best->v1.dim() ||
              (cand->v1.dim() == best->v1.dim() && cand->residual < best->residual)) {
            best = std::move(cand);
          }
        }
      }
      start = end;
    }
  }
  if (!best) {
    throw HypothesisViolation("lemma_decompose: no eigenvalue cluster yields dim V1 >= n - p + 1");
  }
  return *best;
}

}  // namespace cgauge
