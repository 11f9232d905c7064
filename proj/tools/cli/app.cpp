#include "cli/app.hpp"

#include <filesystem>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "cgauge/errors.hpp"
#include "cli/suites.hpp"

namespace cgauge::cli {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNumerical = 1;
constexpr int kExitUsage = 2;

void add_manifold_flags(CLI::App* sub, ManifoldArgs& m) {
  sub->add_option("--manifold", m.name, "s<a>xs<b> (product of spheres) or s<n> (sphere)")
      ->capture_default_str();
  sub->add_option("--r1", m.r1, "radius of the first product factor")->capture_default_str();
  sub->add_option("--r2", m.r2, "radius of the second product factor")->capture_default_str();
  sub->add_option("--r", m.r, "radius of the sphere")->capture_default_str();
  sub->add_option("--p", m.p, "codimension of the sphere")->capture_default_str();
}

void add_quadrature_flags(CLI::App* sub, QuadratureArgs& q) {
  sub->add_option("--fiber-n", q.fiber_n, "circle nodes on the normal fiber")->capture_default_str();
  sub->add_option("--level", q.level, "manifold quadrature level")->capture_default_str();
  sub->add_option("--ambient-level", q.ambient_level, "ambient sphere quadrature level")
      ->capture_default_str();
  sub->add_option("--fiber-level", q.fiber_level, "fiber quadrature level when p > 2")
      ->capture_default_str();
}

void add_estimate_flags(CLI::App* sub, EstimateArgs& e) {
  sub->add_option("--n", e.n, "dimension of V")->capture_default_str();
  sub->add_option("--p", e.p, "dimension of W")->capture_default_str();
  sub->add_option("--mode", e.mode, "prop24|scal or prop23|fixed-k")->capture_default_str();
  sub->add_option("--k", e.k, "k for the fixed-k mode")->capture_default_str();
  sub->add_option("--delta", e.delta, "constraint |sc| >= delta^2 |beta|^2")->capture_default_str();
  sub->add_option("--budget", e.budget, "objective evaluations")->capture_default_str();
  sub->add_option("--seed", e.seed, "random seed")->capture_default_str();
  sub->add_option("--fiber-n", e.fiber_n, "circle nodes for psi")->capture_default_str();
}

void add_counterexample_flags(CLI::App* sub, CounterexampleArgs& c) {
  sub->add_option("--n", c.n, "dimension of V")->capture_default_str();
  sub->add_option("--p", c.p, "dimension of W")->capture_default_str();
  sub->add_option("--m-min", c.m_min, "first sequence index")->capture_default_str();
  sub->add_option("--m-max", c.m_max, "last sequence index (doubling from m-min)")->capture_default_str();
  sub->add_option("--k", c.k, "k for the rescaled sequence")->capture_default_str();
  sub->add_option("--fiber-n", c.fiber_n, "circle nodes for psi")->capture_default_str();
}

}  // namespace

int run(int argc, const char* const* argv) { return run(argc, argv, std::cout, std::cerr); }

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Curvature pinching and total curvature toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string out_dir = ".";
  app.add_option("--out-dir", out_dir, "directory for report.json and series.csv")
      ->capture_default_str();

  EstimateArgs est;
  auto* c_est = app.add_subcommand("estimate-constant", "empirical upper estimate of a pinching constant");
  add_estimate_flags(c_est, est);

  CounterexampleArgs cex;
  auto* c_cex = app.add_subcommand("counterexample", "degenerating sequences without the sc constraint");
  add_counterexample_flags(c_cex, cex);

  ManifoldArgs cl_m;
  QuadratureArgs cl_q;
  auto* c_cl = app.add_subcommand("chern-lashof", "bundle integral versus integrated Morse counts");
  add_manifold_flags(c_cl, cl_m);
  add_quadrature_flags(c_cl, cl_q);

  ManifoldArgs sx_m;
  QuadratureArgs sx_q;
  int sx_index = -1;
  auto* c_sx = app.add_subcommand("shiohama-xu", "per-index bundle integrals versus Morse counts");
  add_manifold_flags(c_sx, sx_m);
  add_quadrature_flags(c_sx, sx_q);
  c_sx->add_option("--index", sx_index, "Morse index (all when omitted)");

  FunctionalArgs tf;
  auto* c_tf = app.add_subcommand("theorem-functional", "integral of |R - kappa R_1|^{n/2}");
  add_manifold_flags(c_tf, tf.manifold);
  add_quadrature_flags(c_tf, tf.quadrature);
  c_tf->add_option("--mode", tf.mode, "scal or fixed-k")->capture_default_str();
  c_tf->add_option("--k", tf.k, "k for the fixed-k mode")->capture_default_str();
  c_tf->add_option("--epsilon-budget", tf.epsilon_budget, "evaluations for the empirical epsilon")
      ->capture_default_str();
  c_tf->add_option("--seed", tf.seed, "random seed")->capture_default_str();

  ManifoldArgs mo_m;
  int directions = 64;
  auto* c_mo = app.add_subcommand("morse", "weak Morse inequalities over sampled directions");
  add_manifold_flags(c_mo, mo_m);
  c_mo->add_option("--directions", directions, "number of sampled directions")->capture_default_str();

  AllArgs all;
  auto* c_all = app.add_subcommand("all", "every suite with default parameters");
  c_all->add_option("--budget", all.estimate.budget, "evaluations for estimate-constant")
      ->capture_default_str();
  c_all->add_option("--seed", all.estimate.seed, "random seed")->capture_default_str();
  c_all->add_option("--epsilon-budget", all.epsilon_budget, "evaluations for the empirical epsilon")
      ->capture_default_str();
  add_quadrature_flags(c_all, all.quadrature);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  SuiteResult result;
  try {
    if (c_est->parsed()) {
      result = run_estimate(est);
    } else if (c_cex->parsed()) {
      result = run_counterexample(cex);
    } else if (c_cl->parsed()) {
      result = run_chern_lashof(cl_m, cl_q);
    } else if (c_sx->parsed()) {
      result = run_shiohama_xu(sx_m, sx_q, sx_index);
    } else if (c_tf->parsed()) {
      result = run_theorem_functional(tf);
    } else if (c_mo->parsed()) {
      result = run_morse(mo_m, directions);
    } else {
      result = run_all(all);
    }
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const cgauge::Error& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  }

  try {
    write_outputs(result, out_dir);
  } catch (const std::exception& e) {
    err << "cannot write outputs: " << e.what() << '\n';
    return kExitNumerical;
  }

  auto summarize = [&](auto&& self, const SuiteResult& r, int depth) -> void {
    out << std::string(static_cast<std::size_t>(2 * depth), ' ') << r.report.suite << ": "
        << (r.failed() ? "fail" : (r.members.empty() ? to_string(r.report.status()) : "pass"));
    if (!r.error.empty()) out << " (" << r.error << ")";
    out << '\n';
    for (const auto& m : r.members) self(self, m, depth + 1);
  };
  summarize(summarize, result, 0);
  return result.failed() ? kExitNumerical : kExitOk;
}

}  // namespace cgauge::cli
