#pragma once

// Derivative-free simplex minimization with restarts. Objective values may
// be +inf to mark infeasible points; such vertices are simply never kept.

#include <functional>
#include <vector>

namespace cgauge {

struct NelderMeadOptions {
  int max_evaluations = 1000;
  double initial_step = 0.1;  ///< relative to max(1, |x0|_inf)
  double f_tolerance = 1e-12;
  double x_tolerance = 1e-10;
  int max_restarts = 8;
};

struct NelderMeadResult {
  std::vector<double> x;
  double value = 0.0;
  int evaluations = 0;
  int restarts = 0;
};

NelderMeadResult nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                             std::vector<double> x0, const NelderMeadOptions& options);

}  // namespace cgauge
