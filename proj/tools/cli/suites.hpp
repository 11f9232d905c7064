#pragma once

#include <cstdint>
#include <string>

#include "cgauge/constants_lab.hpp"
#include "cgauge/submanifold.hpp"
#include "cli/report_io.hpp"

namespace cgauge::cli {

/// Catalog immersion selected on the command line: "s<a>xs<b>" for a
/// product of two spheres, "s<n>" for a sphere in codimension p.
struct ManifoldArgs {
  std::string name = "s2xs2";
  double r1 = 1.0;
  double r2 = 1.0;
  double r = 1.0;
  int p = 2;
};

/// Throws std::invalid_argument on an unknown name.
CatalogImmersion make_immersion(const ManifoldArgs& args);

struct QuadratureArgs {
  int fiber_n = 256;
  int level = 3;
  int ambient_level = 3;
  int fiber_level = 6;

  Resolution resolution() const { return {level, fiber_n, fiber_level, ambient_level}; }
};

struct EstimateArgs {
  int n = 4;
  int p = 2;
  std::string mode = "prop24";
  double k = 1.0;
  double delta = 0.5;
  int budget = 20000;
  std::uint64_t seed = 42;
  int fiber_n = 128;
};

/// "prop24" / "scal" select the scal-normalized functional, "prop23" /
/// "fixed-k" the fixed-k one. Throws std::invalid_argument otherwise.
Mode parse_mode(const std::string& name, double k);

struct CounterexampleArgs {
  int n = 4;
  int p = 2;
  int m_min = 8;
  int m_max = 64;
  double k = 1.0;
  int fiber_n = 256;
};

struct FunctionalArgs {
  ManifoldArgs manifold;
  QuadratureArgs quadrature;
  std::string mode = "scal";
  double k = 1.0;
  int epsilon_budget = 2000;
  std::uint64_t seed = 42;
};

SuiteResult run_estimate(const EstimateArgs& a);
SuiteResult run_counterexample(const CounterexampleArgs& a);
SuiteResult run_chern_lashof(const ManifoldArgs& m, const QuadratureArgs& q);
/// index < 0 checks every index 0..n.
SuiteResult run_shiohama_xu(const ManifoldArgs& m, const QuadratureArgs& q, int index);
SuiteResult run_theorem_functional(const FunctionalArgs& a);
SuiteResult run_morse(const ManifoldArgs& m, int directions);

struct AllArgs {
  EstimateArgs estimate;
  CounterexampleArgs counterexample;
  QuadratureArgs quadrature;
  int directions = 64;
  int epsilon_budget = 2000;
};

SuiteResult run_all(const AllArgs& a);

}  // namespace cgauge::cli
