#include <benchmark/benchmark.h>

#include "groupobs/exact.hpp"
#include "groupobs/generators.hpp"
#include "groupobs/montecarlo.hpp"

namespace {

using namespace groupobs;

const Graph& ba_graph(std::size_t n) {
  static const Graph g = gen_ba(n, 3, 42);
  return g;
}

void BM_SampleCompromised(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(sample_compromised(n, n / 100, ++seed));
  }
}
BENCHMARK(BM_SampleCompromised)->Arg(10'000)->Arg(1'000'000);

void BM_KernelEvaluate(benchmark::State& state) {
  const Graph& g = ba_graph(1'000'000);
  const ObservationScope scope(Target::node, Level::global, static_cast<std::uint32_t>(state.range(0)));
  ObservationKernel kernel(g, scope);
  const NodeSet s = sample_compromised(g.node_count(), g.node_count() / 1000, 7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernel.evaluate(s.members()));
  }
}
BENCHMARK(BM_KernelEvaluate)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_McEstimate(benchmark::State& state) {
  const Graph g = gen_er(250, 0.015, 3);
  const ObservationScope scope(Target::edge, Level::global, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(mc_estimate(g, scope, 25, 500, 1));
  }
}
BENCHMARK(BM_McEstimate)->Unit(benchmark::kMillisecond);

void BM_ExactLocalNodeObs(benchmark::State& state) {
  const Graph& g = ba_graph(1'000'000);
  for (auto _ : state) {
    benchmark::DoNotOptimize(exact_local_node_obs(g, g.node_count() / 100));
  }
}
BENCHMARK(BM_ExactLocalNodeObs)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
