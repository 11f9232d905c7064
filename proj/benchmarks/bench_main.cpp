#include <random>

#include <benchmark/benchmark.h>

#include "cgauge/constants_lab.hpp"
#include "cgauge/morse.hpp"
#include "cgauge/submanifold.hpp"

namespace {

using namespace cgauge;

BilinearForm random_form(int n, int p, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g;
  std::vector<Matrix> comps;
  for (int a = 0; a < p; ++a) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) m(i, j) = m(j, i) = g(rng);
    comps.push_back(m);
  }
  return BilinearForm(std::move(comps));
}

void BM_KnVector(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const BilinearForm b = random_form(n, 3, 1);
  for (auto _ : state) benchmark::DoNotOptimize(kn_vector(b, b));
}
BENCHMARK(BM_KnVector)->Arg(4)->Arg(6)->Arg(8);

void BM_RatioValue(benchmark::State& state) {
  const BilinearForm b = random_form(4, 2, 2);
  const SphereRule rule = circle_rule(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(ratio_value(b, Mode::scal_normalized(), rule));
}
BENCHMARK(BM_RatioValue)->Arg(128)->Arg(256);

void BM_BundleIntegral(benchmark::State& state) {
  const auto imm = CatalogImmersion::product_of_spheres(2, 1.0, 2, 1.0);
  Resolution res;
  res.manifold_level = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(bundle_abs_det_integral(imm, res));
}
BENCHMARK(BM_BundleIntegral)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_MorseProfile(benchmark::State& state) {
  const auto imm = CatalogImmersion::product_of_spheres(2, 1.0, 2, 1.0);
  const auto dirs = sample_directions(6, 64, 5);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(height_critical_points(imm, dirs[i++ % dirs.size()]));
}
BENCHMARK(BM_MorseProfile);

}  // namespace

BENCHMARK_MAIN();
