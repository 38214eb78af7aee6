#include <benchmark/benchmark.h>

#include <memory>

#include "wakefarm/power.hpp"
#include "wakefarm/reduction_table.hpp"

namespace {

using namespace wakefarm;

PowerFunctional functional() {
  static const auto table = std::make_shared<const ReductionTable>(synth_swe_like_table(TurbineSpec{}, 2.0));
  const Site site{0.0, 640.0, 0.0, 320.0};
  return PowerFunctional{default_alpha(TurbineSpec{}), linear_gradient_flow(), table, site};
}

Layout layout(int n) {
  Rng rng(1);
  return random_layout(n, Site{0.0, 640.0, 0.0, 320.0}, rng);
}

void BM_EvaluatePower(benchmark::State& state) {
  const PowerFunctional f = functional();
  const Layout m = layout(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(evaluate_power(f, m));
  state.SetComplexityN(state.range(0));
}

void BM_EvaluateGradient(benchmark::State& state) {
  const PowerFunctional f = functional();
  const Layout m = layout(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(evaluate_gradient(f, m));
  state.SetComplexityN(state.range(0));
}

void BM_TableLookup(benchmark::State& state) {
  const ReductionTable t = synth_swe_like_table(TurbineSpec{}, 2.0);
  Rng rng(2);
  std::vector<LocalFrame> q(1024);
  for (auto& f : q) f = {rng.uniform(-60.0, 800.0), rng.uniform(-200.0, 200.0)};
  std::size_t k = 0;
  for (auto _ : state) benchmark::DoNotOptimize(t.factor(q[k++ & 1023]));
}

}  // namespace

BENCHMARK(BM_EvaluatePower)->RangeMultiplier(2)->Range(8, 128)->Complexity(benchmark::oNSquared);
BENCHMARK(BM_EvaluateGradient)->RangeMultiplier(2)->Range(8, 128)->Complexity(benchmark::oNSquared);
BENCHMARK(BM_TableLookup);
BENCHMARK_MAIN();
