#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <tuple>

#include "cgauge/constants_lab.hpp"
#include "cgauge/nelder_mead.hpp"
#include "cgauge/parallel.hpp"
#include "random.hpp"

namespace cgauge {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kAnnulusLo = 1e-2;
constexpr double kAnnulusHi = 1e2;
constexpr int kRandomStarts = 8;

// Maps a packed parameter vector to the form actually evaluated.
BilinearForm normalize(const BilinearForm& beta, const Mode& mode) {
  const double len = beta.norm();
  if (!(len > 1e-12)) return {};
  if (mode.scale_invariant()) return beta * (1.0 / len);
  if (len < kAnnulusLo) return beta * (kAnnulusLo / len);
  if (len > kAnnulusHi) return beta * (kAnnulusHi / len);
  return beta;
}

class Objective {
 public:
  Objective(const EstimateOptions& opt, const SphereRule& rule) : opt_(opt), rule_(rule) {}

  double operator()(const BilinearForm& raw) const {
    const BilinearForm beta = normalize(raw, opt_.mode);
    if (beta.dim() == 0 || !satisfies_constraint(beta, opt_.delta)) return kInf;
    try {
      return ratio_value(beta, opt_.mode, rule_);
    } catch (const DegenerateRegion&) {
      return kInf;
    }
  }

  double packed(const std::vector<double>& x) const {
    return (*this)(BilinearForm::unpack(opt_.n, opt_.p, x));
  }

 private:
  const EstimateOptions& opt_;
  const SphereRule& rule_;
};

struct Start {
  std::vector<double> x;
  double value = kInf;
};

// Largest |sc| / ||beta||^2, attained by the umbilic form g xi.
double max_constraint_ratio(int n, int p) {
  Vector xi = Vector::Zero(p);
  xi(0) = 1.0;
  const BilinearForm u = BilinearForm::from_scalar(Matrix::Identity(n, n), xi);
  return std::abs(sc(u)) / u.norm_squared();
}

// g xi_1 + eps D xi_2 with D = diag(+1, ..., -1, ...), eps chosen so the
// constraint holds with room to spare.
BilinearForm near_umbilic(int n, int p, double delta) {
  const double d2 = delta * delta;
  const double eps = std::min(0.5, 0.5 * std::sqrt(std::max(0.0, (n - 1.0 - d2) / (1.0 + d2))));
  Matrix d = Matrix::Zero(n, n);
  for (int i = 0; i < n; ++i) d(i, i) = i < n / 2 ? 1.0 : -1.0;
  std::vector<Matrix> comps(static_cast<std::size_t>(p), Matrix::Zero(n, n));
  comps[0] = Matrix::Identity(n, n);
  comps[1] = eps * d;
  return BilinearForm(std::move(comps));
}

}  // namespace

ConstantEstimate estimate_constant(const EstimateOptions& opt) {
  const auto t0 = std::chrono::steady_clock::now();
  const int n = opt.n;
  const int p = opt.p;
  if (p < 2 || 2 * p > n) throw CodimensionError("estimate_constant needs 2 <= p <= n/2");
  if (!(opt.delta > 0.0)) throw std::invalid_argument("estimate_constant: delta must be positive");
  if (opt.budget < 100) throw std::invalid_argument("estimate_constant: budget must be >= 100");
  if (opt.delta * opt.delta > max_constraint_ratio(n, p) - 1e-9) {
    throw EmptyDomain("no form satisfies |sc| >= delta^2 ||beta||^2 for delta^2 > n - 1");
  }

  const SphereRule rule = fiber_sphere_rule(p, opt.fiber_nodes, opt.fiber_level);
  const Objective objective(opt, rule);
  const double form_scale = opt.mode.scale_invariant() ? 1.0 : std::sqrt(std::abs(opt.mode.k));

  ConstantEstimate est;
  est.options = opt;
  est.candidate_ratio = kInf;
  double min_seen = kInf;
  int used = 0;

  // Deterministic explicit starts.
  std::vector<Start> starts;
  for (int l = 1; l < n; ++l) {
    const BilinearForm cand = signature_form(n, p, l) * form_scale;
    const double v = objective(cand);
    ++used;
    if (std::isfinite(v)) {
      est.candidate_ratio = std::min(est.candidate_ratio, v);
      min_seen = std::min(min_seen, v);
      starts.push_back({cand.pack(), v});
    }
  }
  {
    const BilinearForm cand = near_umbilic(n, p, opt.delta) * form_scale;
    const double v = objective(cand);
    ++used;
    if (std::isfinite(v)) {
      min_seen = std::min(min_seen, v);
      starts.push_back({cand.pack(), v});
    }
  }

  // Rejection-sampled Gaussian starts; keep the best few by (value, draw).
  const int dim = BilinearForm::packed_size(n, p);
  const int draws = opt.budget / 4;
  detail::GaussianSource gauss(opt.seed);
  std::vector<std::tuple<double, int, std::vector<double>>> pool;
  for (int r = 0; r < draws; ++r) {
    std::vector<double> x(static_cast<std::size_t>(dim));
    for (double& xi : x) xi = gauss() * form_scale;
    const double v = objective.packed(x);
    ++used;
    if (!std::isfinite(v)) continue;
    min_seen = std::min(min_seen, v);
    pool.emplace_back(v, r, std::move(x));
  }
  std::sort(pool.begin(), pool.end(), [](const auto& a, const auto& b) {
    return std::tie(std::get<0>(a), std::get<1>(a)) < std::tie(std::get<0>(b), std::get<1>(b));
  });
  for (std::size_t i = 0; i < pool.size() && i < static_cast<std::size_t>(kRandomStarts); ++i) {
    starts.push_back({std::get<2>(pool[i]), std::get<0>(pool[i])});
  }
  if (starts.empty()) throw EmptyDomain("no admissible start found within the sampling budget");

  // Local descent, one fixed evaluation cap per start.
  const int remaining = std::max(0, opt.budget - used);
  const int cap = std::max(1, remaining / static_cast<int>(starts.size()));
  std::vector<NelderMeadResult> results(starts.size());
  std::vector<double> local_min(starts.size(), kInf);
  parallel_for(starts.size(), [&](std::size_t s) {
    NelderMeadOptions nm;
    nm.max_evaluations = cap;
    double seen = kInf;
    auto f = [&](const std::vector<double>& x) {
      const double v = objective.packed(x);
      if (std::isfinite(v)) seen = std::min(seen, v);
      return v;
    };
    results[s] = nelder_mead(f, starts[s].x, nm);
    local_min[s] = seen;
  });

  std::size_t win = 0;
  for (std::size_t s = 0; s < results.size(); ++s) {
    used += results[s].evaluations;
    min_seen = std::min(min_seen, local_min[s]);
    if (results[s].value < results[win].value) win = s;
  }

  BilinearForm best = normalize(BilinearForm::unpack(n, p, results[win].x), opt.mode);
  if (opt.mode.scale_invariant()) {
    // Representative with psi = 1.
    const double ps = psi(best, region_of(best, opt.mode), rule);
    best = best * std::pow(ps, -1.0 / n);
  }
  est.argmin_form = best;
  est.estimated_min = omega_ratio(best, opt.mode, opt.delta, rule);
  est.sample_count = used;
  est.admissible_starts = static_cast<int>(starts.size());
  est.min_admissible_sample = min_seen;
  est.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return est;
}

}  // namespace cgauge
