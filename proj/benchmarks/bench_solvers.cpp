#include <benchmark/benchmark.h>

#include "uhp/analytic.hpp"
#include "uhp/graph_solvers.hpp"
#include "uhp/grid_solvers.hpp"
#include "uhp/random_graph.hpp"

namespace {

uhp::GraphProblem bench_graph(std::size_t nodes) {
  uhp::RandomGraphOptions o;
  o.nodes = nodes;
  o.max_out_degree = 8;
  o.min_cost = 0.1;
  o.seed = 99;
  return uhp::make_random_problem(o);
}

void BM_Dijkstra(benchmark::State& state) {
  const auto p = bench_graph(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(uhp::dijkstra_solve(p));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Dijkstra)->RangeMultiplier(4)->Range(1 << 8, 1 << 16)->Complexity();

void BM_Dial(benchmark::State& state) {
  const auto p = bench_graph(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(uhp::dial_solve(p));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Dial)->RangeMultiplier(4)->Range(1 << 8, 1 << 16)->Complexity();

void BM_ValueIteration(benchmark::State& state) {
  const auto p = bench_graph(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(uhp::value_iteration(p));
}
BENCHMARK(BM_ValueIteration)->RangeMultiplier(4)->Range(1 << 8, 1 << 12);

void BM_Fmm(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto p = uhp::radial_problem(uhp::RadialCase::Circular, 0.5, n);
  for (auto _ : state) benchmark::DoNotOptimize(uhp::fmm_solve(p));
  state.SetComplexityN(static_cast<std::int64_t>(n * n));
  state.SetLabel(std::to_string(n) + "^2");
}
BENCHMARK(BM_Fmm)->Arg(101)->Arg(201)->Arg(401)->Arg(801)->Unit(benchmark::kMillisecond)->Complexity();

void BM_Sweep(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto p = uhp::radial_problem(uhp::RadialCase::Circular, 0.5, n);
  for (auto _ : state) benchmark::DoNotOptimize(uhp::sweep_oracle(p));
  state.SetLabel(std::to_string(n) + "^2");
}
BENCHMARK(BM_Sweep)->Arg(51)->Arg(101)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
