#include "uniqmod/minimax_lp.hpp"
#include "uniqmod/solver.hpp"

#include <benchmark/benchmark.h>

#include <cmath>

using namespace uniqmod;

namespace {

void BM_MinimaxLp(benchmark::State& state) {
  const std::size_t count = static_cast<std::size_t>(state.range(0));
  std::vector<double> nodes, values;
  for (std::size_t i = 0; i < count; ++i) {
    nodes.push_back(static_cast<double>(i) / static_cast<double>(count - 1));
    values.push_back(std::exp(nodes.back()));
  }
  const ConstraintSet K(3, {{1, 0.0, 0.5}, {3, std::nullopt, std::nullopt}});
  for (auto _ : state) benchmark::DoNotOptimize(solve_minimax_lp(nodes, values, K));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(count));
}
BENCHMARK(BM_MinimaxLp)->RangeMultiplier(4)->Range(1 << 8, 1 << 16)->Unit(benchmark::kMillisecond);

void BM_SolveBestApprox(benchmark::State& state) {
  const ApproximationInstance inst(FunctionSpec::abs_shift(0.5), ConstraintSet(2, {{2, -1.0, 1.0}}));
  const double grid_eps = std::pow(10.0, -static_cast<double>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(solve_best_approx(inst, grid_eps));
}
BENCHMARK(BM_SolveBestApprox)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

}  // namespace
