#include "cgauge/nelder_mead.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace cgauge {

namespace {

using Point = std::vector<double>;

Point affine(const Point& a, const Point& b, double t) {
  // a + t (b - a)
  Point out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + t * (b[i] - a[i]);
  return out;
}

}  // namespace

NelderMeadResult nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                             std::vector<double> x0, const NelderMeadOptions& opt) {
  const std::size_t d = x0.size();
  NelderMeadResult res;
  int evals = 0;
  auto eval = [&](const Point& x) {
    ++evals;
    const double v = f(x);
    return std::isnan(v) ? std::numeric_limits<double>::infinity() : v;
  };

  Point best = std::move(x0);
  double best_f = eval(best);
  double step_scale = opt.initial_step;

  for (int round = 0; round <= opt.max_restarts && evals < opt.max_evaluations; ++round) {
    res.restarts = round;
    const double anchor = std::max(1.0, std::abs(*std::max_element(best.begin(), best.end(),
        [](double a, double b) { return std::abs(a) < std::abs(b); })));
    std::vector<Point> simplex{best};
    std::vector<double> fv{best_f};
    for (std::size_t i = 0; i < d && evals < opt.max_evaluations; ++i) {
      Point v = best;
      v[i] += step_scale * anchor;
      fv.push_back(eval(v));
      simplex.push_back(std::move(v));
    }
    if (simplex.size() < d + 1) break;

    std::vector<std::size_t> order(d + 1);
    while (evals < opt.max_evaluations) {
      std::iota(order.begin(), order.end(), std::size_t{0});
      std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return fv[a] < fv[b]; });
      const std::size_t lo = order.front();
      const std::size_t hi = order.back();
      const std::size_t second = order[d - 1];

      double diameter = 0.0;
      for (std::size_t k = 0; k <= d; ++k) {
        for (std::size_t i = 0; i < d; ++i) diameter = std::max(diameter, std::abs(simplex[k][i] - simplex[lo][i]));
      }
      const bool flat = std::isfinite(fv[hi]) &&
                        std::abs(fv[hi] - fv[lo]) <= opt.f_tolerance * (std::abs(fv[lo]) + 1e-300);
      if (flat || diameter <= opt.x_tolerance) break;

      Point centroid(d, 0.0);
      for (std::size_t k = 0; k <= d; ++k) {
        if (k == hi) continue;
        for (std::size_t i = 0; i < d; ++i) centroid[i] += simplex[k][i] / static_cast<double>(d);
      }

      const Point xr = affine(centroid, simplex[hi], -1.0);
      const double fr = eval(xr);
      if (fr < fv[lo]) {
        const Point xe = affine(centroid, simplex[hi], -2.0);
        const double fe = evals < opt.max_evaluations ? eval(xe) : std::numeric_limits<double>::infinity();
        if (fe < fr) {
          simplex[hi] = xe;
          fv[hi] = fe;
        } else {
          simplex[hi] = xr;
          fv[hi] = fr;
        }
        continue;
      }
      if (fr < fv[second]) {
        simplex[hi] = xr;
        fv[hi] = fr;
        continue;
      }
      if (evals >= opt.max_evaluations) break;
      const bool outside = fr < fv[hi];
      const Point xc = affine(centroid, outside ? xr : simplex[hi], 0.5);
      const double fc = eval(xc);
      if (fc < (outside ? fr : fv[hi])) {
        simplex[hi] = xc;
        fv[hi] = fc;
        continue;
      }
      // Shrink towards the best vertex.
      for (std::size_t k = 0; k <= d && evals < opt.max_evaluations; ++k) {
        if (k == lo) continue;
        simplex[k] = affine(simplex[lo], simplex[k], 0.5);
        fv[k] = eval(simplex[k]);
      }
    }

    const auto it = std::min_element(fv.begin(), fv.end());
    const auto idx = static_cast<std::size_t>(it - fv.begin());
    const bool improved = *it < best_f - opt.f_tolerance * std::abs(best_f);
    if (*it < best_f) {
      best_f = *it;
      best = simplex[idx];
    }
    if (!improved && round > 0) break;
    step_scale *= 0.5;
  }

  res.x = std::move(best);
  res.value = best_f;
  res.evaluations = evals;
  return res;
}

}  // namespace cgauge
