#include "uniqmod/interp.hpp"

#include <benchmark/benchmark.h>

using namespace uniqmod;

namespace {

template <class T>
InterpolationProblem<T> every_other(int n) {
  InterpolationProblem<T> prob;
  prob.n = n;
  for (int d = 1; d <= n; d += 2) prob.forbidden.push_back(d);
  const std::size_t count = static_cast<std::size_t>(n + 1) - prob.forbidden.size();
  for (std::size_t j = 0; j < count; ++j) {
    prob.nodes.push_back(T(static_cast<long>(j + 1)) / T(static_cast<long>(count + 1)));
    prob.values.push_back(T(static_cast<long>(j % 3)) - T(1));
  }
  return prob;
}

void BM_InterpolateExact(benchmark::State& state) {
  const auto prob = every_other<Rational>(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(constrained_interpolate(prob));
}
BENCHMARK(BM_InterpolateExact)->DenseRange(2, 10, 2);

void BM_InterpolateOracle(benchmark::State& state) {
  const auto prob = every_other<Rational>(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(solve_linear_system_oracle(prob));
}
BENCHMARK(BM_InterpolateOracle)->DenseRange(2, 12, 2);

void BM_InterpolateDouble(benchmark::State& state) {
  const auto prob = every_other<double>(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(constrained_interpolate(prob));
}
BENCHMARK(BM_InterpolateDouble)->DenseRange(2, 10, 2);

}  // namespace
