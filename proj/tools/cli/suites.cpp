#include "cli/suites.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <regex>
#include <stdexcept>

#include "cgauge/morse.hpp"

namespace cgauge::cli {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string str(double v) { return format17(v); }
std::string str(int v) { return std::to_string(v); }

double relative_gap(double a, double b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return scale > 0.0 ? std::abs(a - b) / scale : 0.0;
}

nlohmann::ordered_json form_json(const BilinearForm& beta) {
  nlohmann::ordered_json comps = nlohmann::ordered_json::array();
  for (const auto& m : beta.components()) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      nlohmann::ordered_json row = nlohmann::ordered_json::array();
      for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(format17(m(i, j)));
      rows.push_back(std::move(row));
    }
    comps.push_back(std::move(rows));
  }
  return comps;
}

void describe_manifold(VerificationReport& rep, const ManifoldArgs& m, const CatalogImmersion& imm) {
  rep.add_input("manifold", m.name);
  rep.add_input("immersion", imm.name());
}

}  // namespace

CatalogImmersion make_immersion(const ManifoldArgs& args) {
  std::smatch match;
  static const std::regex product(R"(s(\d+)xs(\d+))");
  static const std::regex sphere(R"(s(\d+))");
  if (std::regex_match(args.name, match, product)) {
    return CatalogImmersion::product_of_spheres(std::stoi(match[1]), args.r1, std::stoi(match[2]), args.r2);
  }
  if (std::regex_match(args.name, match, sphere)) {
    return CatalogImmersion::sphere_in_codim(std::stoi(match[1]), args.r, args.p);
  }
  throw std::invalid_argument("unknown manifold '" + args.name + "' (expected s<a>xs<b> or s<n>)");
}

Mode parse_mode(const std::string& name, double k) {
  if (name == "prop24" || name == "scal" || name == "scal-normalized") return Mode::scal_normalized();
  if (name == "prop23" || name == "fixed-k") return Mode::fixed_k(k);
  throw std::invalid_argument("unknown mode '" + name + "'");
}

SuiteResult run_estimate(const EstimateArgs& a) {
  const auto t0 = Clock::now();
  SuiteResult out;
  auto& rep = out.report;
  rep.suite = "estimate-constant";
  const Mode mode = parse_mode(a.mode, a.k);
  rep.add_input("n", str(a.n));
  rep.add_input("p", str(a.p));
  rep.add_input("mode", mode.label());
  rep.add_input("delta", str(a.delta));
  rep.add_input("budget", str(a.budget));
  rep.add_input("seed", std::to_string(a.seed));
  rep.add_input("fiber_n", str(a.fiber_n));

  EstimateOptions opt;
  opt.n = a.n;
  opt.p = a.p;
  opt.mode = mode;
  opt.delta = a.delta;
  opt.budget = a.budget;
  opt.seed = a.seed;
  opt.fiber_nodes = a.fiber_n;

  ConstantEstimate est;
  try {
    est = estimate_constant(opt);
  } catch (const EmptyDomain& e) {
    rep.add_check("admissible_domain_nonempty", false, true, e.what());
    out.error = e.what();
    rep.wall_time_s = seconds_since(t0);
    return out;
  }
  const SphereRule rule = fiber_sphere_rule(a.p, a.fiber_n, opt.fiber_level);

  rep.add_quantity("estimated_min", est.estimated_min, 0.0, Provenance::EmpiricalEstimate);
  rep.add_quantity("candidate_ratio", est.candidate_ratio, 0.0, Provenance::Quadrature);
  rep.add_quantity("min_admissible_sample", est.min_admissible_sample, 0.0, Provenance::Quadrature);
  rep.add_quantity("sample_count", est.sample_count, 0.0, Provenance::Exact);
  rep.add_quantity("admissible_starts", est.admissible_starts, 0.0, Provenance::Exact);
  rep.add_quantity("argmin_sc_ratio",
                   std::abs(sc(est.argmin_form)) / est.argmin_form.norm_squared(), 1e-10, Provenance::Exact);

  rep.add_check("admissible_domain_nonempty", true);
  rep.add_check("estimate_positive", est.estimated_min > 0.0);
  if (std::isfinite(est.candidate_ratio)) {
    rep.add_check("estimate_not_above_explicit_candidate",
                  est.estimated_min <= est.candidate_ratio * (1.0 + 1e-12));
  }
  rep.add_check("admissible_samples_positive", est.min_admissible_sample > 0.0);

  // Closed-form diagonal bound, where its stated condition holds.
  if (mode.kind == Mode::Kind::ScalNormalized) {
    for (int l = 1; l <= a.n; ++l) {
      double bound = 0.0;
      try {
        bound = remark_bound(a.n, a.p, a.delta, l, rule);
      } catch (const ConditionError&) {
        continue;
      }
      double direct = 0.0;
      try {
        direct = ratio_value(signature_form(a.n, a.p, l), mode, rule);
      } catch (const DegenerateRegion&) {
        continue;  // signature outside the index window
      }
      const std::string tag = "_l" + std::to_string(l);
      rep.add_quantity("diagonal_bound" + tag, bound, 0.0, Provenance::Quadrature);
      rep.add_quantity("diagonal_direct_ratio" + tag, direct, 0.0, Provenance::Quadrature);
      rep.add_check("diagonal_bound_within_5pct_of_direct" + tag, relative_gap(bound, direct) < 0.05, false,
                    "the displayed bound and the direct ratio use different normalizations");
    }
  }

  out.extra["label"] = est.label;
  out.extra["argmin_form"] = form_json(est.argmin_form);
  rep.wall_time_s = seconds_since(t0);
  return out;
}

SuiteResult run_counterexample(const CounterexampleArgs& a) {
  const auto t0 = Clock::now();
  SuiteResult out;
  auto& rep = out.report;
  rep.suite = "counterexample";
  rep.add_input("n", str(a.n));
  rep.add_input("p", str(a.p));
  rep.add_input("m_min", str(a.m_min));
  rep.add_input("m_max", str(a.m_max));
  rep.add_input("k", str(a.k));
  rep.add_input("fiber_n", str(a.fiber_n));
  rep.add_input("pattern", "default");
  if (a.m_min < 1 || a.m_max < a.m_min) throw std::invalid_argument("need 1 <= m-min <= m-max");

  const SphereRule rule = fiber_sphere_rule(a.p, a.fiber_n, 6);
  const SequencePattern pat = default_pattern(a.n, a.p);
  Series series;
  series.header = {"m", "gamma_norm", "sc", "rho", "sigma", "ratio", "beta_ratio", "beta_sc_ratio"};

  std::vector<SequenceRecord> recs;
  std::vector<double> beta_sc_ratio;
  double norm_dev = 0.0;
  double sigma_dev = 0.0;
  double transfer_dev = 0.0;
  try {
    for (int m = a.m_min; m <= a.m_max; m *= 2) {
      const SequenceTerm term = example_sequence(m, a.n, a.p, pat, rule);
      const SequenceRecord& r = term.record;
      const BilinearForm beta = example_beta_sequence(m, a.k, a.n, a.p, pat);
      const double beta_ratio = ratio_value(beta, Mode::fixed_k(a.k), rule);
      const double bsr = std::abs(sc(beta)) / beta.norm_squared();

      norm_dev = std::max(norm_dev, std::abs(r.gamma_norm - 1.0));
      const double eta_pow = std::pow(1.0 / m, a.n - 1);
      sigma_dev = std::max(sigma_dev, relative_gap(r.psi, eta_pow * r.sigma));
      transfer_dev = std::max(transfer_dev, relative_gap(beta_ratio, r.ratio));
      recs.push_back(r);
      beta_sc_ratio.push_back(bsr);
      series.rows.push_back({str(m), str(r.gamma_norm), str(r.sc_value), str(r.rho), str(r.sigma), str(r.ratio),
                             str(beta_ratio), str(bsr)});
    }
  } catch (const Error& e) {
    out.error = e.what();
    rep.add_check("sequence_constructed", false, true, e.what());
    rep.wall_time_s = seconds_since(t0);
    return out;
  }

  bool sc_decreasing = true;
  bool ratio_nonincreasing = true;
  for (std::size_t i = 1; i < recs.size(); ++i) {
    sc_decreasing = sc_decreasing && std::abs(recs[i].sc_value) < std::abs(recs[i - 1].sc_value);
    ratio_nonincreasing = ratio_nonincreasing && recs[i].ratio <= recs[i - 1].ratio;
  }
  const double first = recs.front().ratio;
  const double last = recs.back().ratio;

  rep.add_quantity("max_gamma_norm_deviation", norm_dev, 1e-12, Provenance::Exact);
  rep.add_quantity("ratio_first", first, 0.0, Provenance::Quadrature);
  rep.add_quantity("ratio_last", last, 0.0, Provenance::Quadrature);
  rep.add_quantity("ratio_last_over_first", last / first, 0.25, Provenance::Quadrature);
  rep.add_quantity("sc_first", recs.front().sc_value, 0.0, Provenance::Exact);
  rep.add_quantity("sc_last", recs.back().sc_value, 0.0, Provenance::Exact);
  rep.add_quantity("max_psi_sigma_deviation", sigma_dev, 1e-10, Provenance::Quadrature);
  rep.add_quantity("max_ratio_transfer_deviation", transfer_dev, 1e-8, Provenance::Quadrature);

  rep.add_check("gamma_norm_unit", norm_dev <= 1e-12);
  rep.add_check("abs_sc_strictly_decreasing", sc_decreasing);
  rep.add_check("ratio_nonincreasing", ratio_nonincreasing);
  if (recs.size() > 1) rep.add_check("ratio_last_below_quarter_of_first", last < 0.25 * first);
  rep.add_check("psi_equals_eta_power_sigma", sigma_dev <= 1e-10);
  rep.add_check("ratio_transfer_identity", transfer_dev <= 1e-8);
  if (recs.size() > 1) rep.add_check("beta_sc_ratio_decreasing", beta_sc_ratio.back() < beta_sc_ratio.front());

  out.series = std::move(series);
  rep.wall_time_s = seconds_since(t0);
  return out;
}

SuiteResult run_chern_lashof(const ManifoldArgs& m, const QuadratureArgs& q) {
  const CatalogImmersion imm = make_immersion(m);
  SuiteResult out;
  out.report = chern_lashof_check(imm, q.resolution());
  out.report.inputs.insert(out.report.inputs.begin(), {"manifold", m.name});
  return out;
}

SuiteResult run_shiohama_xu(const ManifoldArgs& m, const QuadratureArgs& q, int index) {
  const CatalogImmersion imm = make_immersion(m);
  const Resolution res = q.resolution();
  if (index >= 0) {
    SuiteResult out;
    out.report = shiohama_xu_check(imm, index, res);
    out.report.inputs.insert(out.report.inputs.begin(), {"manifold", m.name});
    return out;
  }

  const auto t0 = Clock::now();
  SuiteResult out;
  auto& rep = out.report;
  rep.suite = "shiohama-xu";
  describe_manifold(rep, m, imm);
  rep.add_input("manifold_level", str(res.manifold_level));
  rep.add_input("fiber_nodes", std::to_string(imm.fiber_rule(res).size()));
  rep.add_input("ambient_level", str(res.ambient_level));
  rep.add_input("index", "all");

  const auto lhs = index_bundle_integrals(imm, res);
  const auto rhs = morse_count_integrals(imm, res);
  for (int i = 0; i <= imm.dim(); ++i) {
    const auto u = static_cast<std::size_t>(i);
    const double gap = relative_gap(lhs[u], rhs[u]);
    const bool small = std::abs(lhs[u]) < 1e-3 && std::abs(rhs[u]) < 1e-3;
    const std::string tag = "_" + std::to_string(i);
    rep.add_quantity("lhs_bundle_integral" + tag, lhs[u], 1e-3, Provenance::Quadrature);
    rep.add_quantity("rhs_morse_integral" + tag, rhs[u], 1e-3, Provenance::Quadrature);
    rep.add_check("lhs_equals_rhs" + tag, gap < 1e-3 || small, true, small ? "both sides below 1e-3" : "");
  }
  const double total = bundle_abs_det_integral(imm, res);
  double sum = 0.0;
  for (double v : lhs) sum += v;
  rep.add_quantity("partition_deviation", relative_gap(sum, total), 1e-6, Provenance::Quadrature);
  rep.add_check("index_partition_sums_to_total", relative_gap(sum, total) < 1e-6);
  rep.wall_time_s = seconds_since(t0);
  return out;
}

SuiteResult run_theorem_functional(const FunctionalArgs& a) {
  const auto t0 = Clock::now();
  const CatalogImmersion imm = make_immersion(a.manifold);
  const Resolution res = a.quadrature.resolution();
  const bool scal_mode = parse_mode(a.mode, a.k).kind == Mode::Kind::ScalNormalized;
  const CurvatureMode cmode = scal_mode ? CurvatureMode::ScalNormalized : CurvatureMode::FixedK;
  const int n = imm.dim();

  SuiteResult out;
  auto& rep = out.report;
  rep.suite = "theorem-functional";
  describe_manifold(rep, a.manifold, imm);
  rep.add_input("mode", scal_mode ? "scal-normalized" : "fixed-k");
  if (!scal_mode) rep.add_input("k", str(a.k));
  rep.add_input("manifold_level", str(res.manifold_level));
  rep.add_input("epsilon_budget", str(a.epsilon_budget));
  rep.add_input("seed", std::to_string(a.seed));

  const FunctionalValue fv = curvature_functional(imm, cmode, a.k, res);
  const double closed = curvature_functional_closed_form(imm, cmode, a.k);
  rep.add_quantity("functional", fv.value, 1e-3, Provenance::Quadrature);
  rep.add_quantity("functional_closed_form", closed, 0.0, Provenance::ClosedForm);
  const bool match = closed > 1e-12 ? relative_gap(fv.value, closed) < 1e-3 : std::abs(fv.value) < 1e-10;
  rep.add_check("functional_matches_closed_form", match);

  const ProductRule mrule = imm.manifold_rule(res.manifold_level);
  const double lambda = pinch_ratio(imm, mrule.point(0));
  rep.add_quantity("pinch_ratio", lambda, 1e-12, Provenance::Exact);

  // Comparison against eps * I with an empirical eps; never asserted.
  const PoincarePolynomial betti = imm.topology();
  const int p = imm.codim();
  const bool window = scal_mode || a.k > 0.0;
  const int betti_sum = window ? betti_window_sum(betti, p, n) : betti.total();
  rep.add_quantity("betti_sum", betti_sum, 0.0, Provenance::Exact);
  const std::string caveat =
      "empirical epsilon is an upper estimate of the true constant, so agreement is not a proof";
  out.extra["caveat"] = caveat;
  double eps = std::numeric_limits<double>::infinity();
  std::string skipped;
  for (int q = 2; 2 * q <= n; ++q) {
    EstimateOptions opt;
    opt.n = n;
    opt.p = q;
    opt.mode = scal_mode ? Mode::scal_normalized() : Mode::fixed_k(a.k);
    opt.delta = std::sqrt(lambda);
    opt.budget = a.epsilon_budget;
    opt.seed = a.seed;
    try {
      const ConstantEstimate est = estimate_constant(opt);
      const double e = std::pow(0.25 * est.estimated_min, n / 4.0) * sphere_volume(n + q - 1);
      eps = std::min(eps, e);
    } catch (const EmptyDomain& e) {
      skipped = e.what();
    }
  }
  if (std::isfinite(eps)) {
    rep.add_quantity("epsilon_empirical", eps, 0.0, Provenance::EmpiricalEstimate);
    rep.add_quantity("epsilon_times_betti_sum", eps * betti_sum, 0.0, Provenance::EmpiricalEstimate);
    rep.add_check("inequality_consistent_under_empirical_epsilon", fv.value >= eps * betti_sum, false, caveat);
  } else {
    rep.add_check("inequality_consistent_under_empirical_epsilon", false, false,
                  "no empirical epsilon: " + (skipped.empty() ? std::string("codimension range empty") : skipped));
  }
  rep.wall_time_s = seconds_since(t0);
  return out;
}

SuiteResult run_morse(const ManifoldArgs& m, int directions) {
  const CatalogImmersion imm = make_immersion(m);
  SuiteResult out;
  out.report = morse_inequality_check(imm, directions);
  out.report.inputs.insert(out.report.inputs.begin(), {"manifold", m.name});
  const auto dirs = sample_directions(imm.ambient_dim(), 1, 0x6d6f727365ULL);
  const MorseProfile first = generic_profile(imm, dirs.front());
  nlohmann::ordered_json mu = nlohmann::ordered_json::array();
  for (int c : first.counts) mu.push_back(c);
  out.extra["mu_first_direction"] = mu;
  const PoincarePolynomial poly = imm.topology();
  nlohmann::ordered_json beta = nlohmann::ordered_json::array();
  for (int b : poly.coefficients()) beta.push_back(b);
  out.extra["betti"] = beta;
  return out;
}

SuiteResult run_all(const AllArgs& a) {
  const auto t0 = Clock::now();
  SuiteResult out;
  out.report.suite = "all";

  ManifoldArgs product;
  product.name = "s2xs2";
  ManifoldArgs sphere;
  sphere.name = "s4";

  out.members.push_back(run_chern_lashof(product, a.quadrature));
  out.members.push_back(run_chern_lashof(sphere, a.quadrature));
  out.members.push_back(run_shiohama_xu(product, a.quadrature, -1));

  FunctionalArgs scal;
  scal.manifold = product;
  scal.quadrature = a.quadrature;
  scal.mode = "scal";
  scal.epsilon_budget = a.epsilon_budget;
  out.members.push_back(run_theorem_functional(scal));
  FunctionalArgs fixed;
  fixed.manifold = sphere;
  fixed.quadrature = a.quadrature;
  fixed.mode = "fixed-k";
  fixed.k = 1.0;
  fixed.epsilon_budget = a.epsilon_budget;
  out.members.push_back(run_theorem_functional(fixed));

  out.members.push_back(run_morse(product, a.directions));
  out.members.push_back(run_morse(sphere, a.directions));
  out.members.push_back(run_counterexample(a.counterexample));
  out.members.push_back(run_estimate(a.estimate));

  out.report.wall_time_s = seconds_since(t0);
  return out;
}

}  // namespace cgauge::cli
