#include <cmath>
#include <string>

#include "cgauge/constants_lab.hpp"

namespace cgauge {

SequencePattern default_pattern(int n, int p) {
  if (p < 2 || 2 * p > n) throw CodimensionError("default_pattern needs 2 <= p <= n/2");
  SequencePattern pat;
  for (int j = 0; j < n - 1; ++j) pat.s.push_back(j < p ? -0.5 : 2.0);
  pat.t.assign(static_cast<std::size_t>(p - 1), 1.0);
  pat.theta = Matrix(p - 1, n - 1);
  for (int a = 0; a < p - 1; ++a) {
    for (int j = 0; j < n - 1; ++j) pat.theta(a, j) = j < p ? -1.0 : 0.25;
  }
  return pat;
}

namespace {

struct Ingredients {
  double eta = 0.0;
  double gamma1 = 0.0;
  Vector a;      // n - 1
  Vector b;      // p - 1
  Matrix theta;  // (p - 1) x (n - 1)
};

int diagonal_index(const Vector& d) {
  int neg = 0;
  for (Eigen::Index i = 0; i < d.size(); ++i) neg += d(i) < 0.0 ? 1 : 0;
  return neg;
}

Ingredients ingredients(int m, int n, int p, const SequencePattern& pat) {
  if (p < 2 || 2 * p > n) throw CodimensionError("sequence needs 2 <= p <= n/2");
  if (m < 1) throw PatternError("sequence index must be >= 1");
  if (pat.s.size() != static_cast<std::size_t>(n - 1) || pat.t.size() != static_cast<std::size_t>(p - 1) ||
      pat.theta.rows() != p - 1 || pat.theta.cols() != n - 1) {
    throw PatternError("pattern sizes do not match (n, p)");
  }
  Ingredients in;
  in.eta = 1.0 / m;
  in.a = Eigen::Map<const Vector>(pat.s.data(), n - 1) / m;
  in.b = Eigen::Map<const Vector>(pat.t.data(), p - 1) / m;

  // eta^{2(n-2)/n} sum a^2 + sum theta^2 = 1 makes ||gamma_m|| = 1.
  const double theta_sq = pat.theta.squaredNorm();
  const double rest = 1.0 - std::pow(in.eta, 2.0 * (n - 2) / n) * in.a.squaredNorm();
  if (!(theta_sq > 0.0) || !(rest > 0.0)) throw PatternError("theta normalization has no solution");
  in.theta = pat.theta * std::sqrt(rest / theta_sq);

  const double g1_sq = 1.0 - in.eta * in.eta - std::pow(in.eta, 2.0 * (n - 2) / n) * in.b.squaredNorm();
  if (!(g1_sq > 0.0)) {
    throw PatternError("gamma^(1) normalization is negative at m = " + std::to_string(m));
  }
  in.gamma1 = std::sqrt(g1_sq);

  // Both index windows.
  Vector d1(n);
  d1(0) = in.gamma1;
  d1.tail(n - 1) = std::pow(in.eta, 2.0 * (n - 1) / n) * in.a;
  const int i1 = diagonal_index(d1);
  if (i1 < p || i1 > n - p) throw PatternError("first diagonal misses the index window");
  for (int al = 0; al < p - 1; ++al) {
    Vector d(n);
    d(0) = in.b(al);
    d.tail(n - 1) = std::pow(in.eta, 2.0 / n) * in.theta.row(al).transpose();
    const int ia = diagonal_index(d);
    if (ia < p || ia > n - p) throw PatternError("normal diagonal misses the index window");
  }
  return in;
}

BilinearForm build_gamma(const Ingredients& in, int n, int p) {
  std::vector<Matrix> comps(static_cast<std::size_t>(p), Matrix::Zero(n, n));
  comps[0](0, 0) = in.gamma1;
  const double e1 = std::pow(in.eta, 2.0 * (n - 1) / n);
  for (int j = 1; j < n; ++j) comps[0](j, j) = e1 * in.a(j - 1);
  const double e2 = std::pow(in.eta, (n - 2.0) / n);
  const double e3 = std::pow(in.eta, 2.0 / n);
  for (int al = 1; al < p; ++al) {
    auto& c = comps[static_cast<std::size_t>(al)];
    c(0, 0) = e2 * in.b(al - 1);
    for (int j = 1; j < n; ++j) c(j, j) = e2 * e3 * in.theta(al - 1, j - 1);
  }
  return BilinearForm(std::move(comps));
}

// phi_scal(gamma_m) / eta^{4(n-1)/n} from the diagonal values
// v_i = gamma_m(e_i, e_i). Writing c_ij = <v_i, v_j> / eta^{2(n-1)/n}:
//   c_1j = gamma1 a_j + sum_al b_al theta_al,j
//   c_st = eta^{2(n-1)/n} a_s a_t + eta^{2/n} sum_al theta_al,s theta_al,t
// and kappa' = (2 sum_j c_1j + sum_{s != t} c_st) / (n(n-1)),
//   rho = 16 sum_j (c_1j - kappa')^2 + 8 sum_{s != t} (c_st - kappa')^2.
double rho_of(const Ingredients& in, int n) {
  const int q = n - 1;
  const double e_a = std::pow(in.eta, 2.0 * (n - 1) / n);
  const double e_t = std::pow(in.eta, 2.0 / n);
  Vector c1(q);
  for (int j = 0; j < q; ++j) c1(j) = in.gamma1 * in.a(j) + in.b.dot(in.theta.col(j));
  Matrix cst(q, q);
  for (int s = 0; s < q; ++s) {
    for (int t = 0; t < q; ++t) {
      cst(s, t) = e_a * in.a(s) * in.a(t) + e_t * in.theta.col(s).dot(in.theta.col(t));
    }
  }
  double off = 0.0;
  for (int s = 0; s < q; ++s) {
    for (int t = 0; t < q; ++t) {
      if (s != t) off += cst(s, t);
    }
  }
  const double kappa = (2.0 * c1.sum() + off) / (n * (n - 1.0));
  double rho = 16.0 * (c1.array() - kappa).square().sum();
  for (int s = 0; s < q; ++s) {
    for (int t = 0; t < q; ++t) {
      if (s != t) rho += 8.0 * (cst(s, t) - kappa) * (cst(s, t) - kappa);
    }
  }
  return rho;
}

// int over Omega(gamma_m) of
//   |(u_1 gamma1 + eta^{(n-2)/n} sum u_al b_al) prod_j (eta^{(n-2)/n} a_j u_1 + sum u_al theta_al,j)|.
double sigma_of(const Ingredients& in, int n, const Region& region, const SphereRule& rule) {
  const double e2 = std::pow(in.eta, (n - 2.0) / n);
  return integrate_region(
      rule,
      [&](const Vector& u) {
        const Vector tail = u.tail(u.size() - 1);
        double v = u(0) * in.gamma1 + e2 * tail.dot(in.b);
        for (int j = 0; j < n - 1; ++j) v *= e2 * in.a(j) * u(0) + tail.dot(in.theta.col(j));
        return std::abs(v);
      },
      [&](const Vector& u) { return region.contains(u); });
}

}  // namespace

SequenceTerm example_sequence(int m, int n, int p, const SequencePattern& pattern, const SphereRule& rule) {
  const Ingredients in = ingredients(m, n, p, pattern);
  SequenceTerm out;
  out.gamma = build_gamma(in, n, p);
  const BilinearForm& g = out.gamma;

  SequenceRecord& r = out.record;
  r.m = m;
  r.gamma_norm = g.norm();
  r.sc_value = sc(g);
  r.rho = rho_of(in, n);
  r.phi_scal = phi_scal(g);

  const double e_phi = std::pow(in.eta, 4.0 * (n - 1) / n);
  const double scale = std::max(std::abs(r.phi_scal), e_phi * std::abs(r.rho));
  if (std::abs(r.phi_scal - e_phi * r.rho) > 1e-8 * scale) {
    throw Error("sequence: tensor phi disagrees with the diagonal closed form");
  }

  const Region region = region_of(g, Mode::scal_normalized());
  r.psi = psi(g, region, rule);
  r.sigma = sigma_of(in, n, region, rule);
  if (!(r.psi > 0.0)) throw DegenerateRegion("sequence: empty region");
  r.ratio = r.phi_scal / std::pow(r.psi, 4.0 / n);
  return out;
}

BilinearForm example_beta_sequence(int m, double k, int n, int p, const SequencePattern& pattern) {
  const BilinearForm gamma = build_gamma(ingredients(m, n, p, pattern), n, p);
  const double s = sc(gamma);
  if (!(k * s > 0.0)) throw SignError("example_beta_sequence: needs k sc(gamma_m) > 0");
  return gamma * std::sqrt(n * (n - 1.0) * k / s);
}

}  // namespace cgauge
