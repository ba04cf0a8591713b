#include <benchmark/benchmark.h>

#include "wcp/generator.h"
#include "wcp/init_strategy.h"
#include "wcp/labels.h"
#include "wcp/residual.h"
#include "wcp/solver.h"

namespace {

wcp::WindFarm Farm(std::int64_t turbines, std::int64_t substations) {
  wcp::GeneratorSpec spec = wcp::DefaultGeneratorSpec(wcp::SizeClass::kN4);
  spec.min_turbines = spec.max_turbines = turbines;
  spec.min_substations = spec.max_substations = substations;
  spec.seed = 1;
  return wcp::Generate(spec);
}

void BM_Solve(benchmark::State& state) {
  const wcp::WindFarm farm = Farm(state.range(0), state.range(1));
  wcp::SolveOptions options;
  options.init = {wcp::PathMetric::kLength, wcp::SubstationTarget::kAny, true};
  options.delta = wcp::DeltaKind::kIncDec;
  for (auto _ : state) {
    benchmark::DoNotOptimize(wcp::Solve(farm, options).cost);
  }
}
BENCHMARK(BM_Solve)
    ->Args({20, 1})
    ->Args({80, 2})
    ->Args({200, 3})
    ->Unit(benchmark::kMillisecond);

void BM_TwoLabelBellmanFord(benchmark::State& state) {
  const wcp::WindFarm farm = Farm(state.range(0), 3);
  const wcp::Flow flow = wcp::InitializeFlow(farm, {});
  const wcp::ResidualView view = wcp::BuildResidual(farm, flow, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(wcp::RunTwoLabelBellmanFord(view).converged);
  }
}
BENCHMARK(BM_TwoLabelBellmanFord)->Arg(50)->Arg(200)->Arg(500);

void BM_Initialize(benchmark::State& state) {
  const wcp::WindFarm farm = Farm(state.range(0), 3);
  const wcp::InitStrategy strategy{wcp::PathMetric::kLength,
                                   wcp::SubstationTarget::kAny, true};
  for (auto _ : state) {
    benchmark::DoNotOptimize(wcp::InitializeFlow(farm, strategy));
  }
}
BENCHMARK(BM_Initialize)->Arg(200)->Arg(500);

}  // namespace

BENCHMARK_MAIN();
