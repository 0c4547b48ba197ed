#include <benchmark/benchmark.h>

#include "schelling/metrics.hpp"

using namespace schelling;

namespace {

void BM_ContiguityMetrics(benchmark::State& state) {
  const TorusGrid grid(10);
  const auto config = init_configuration(3, grid, 37, 37);
  for (auto _ : state) {
    const auto g = contiguity_graph(config, grid);
    benchmark::DoNotOptimize(freeman_index(g).value + morans_i(g) + gearys_c(g));
  }
}
BENCHMARK(BM_ContiguityMetrics);

void BM_FriendshipGraph(benchmark::State& state) {
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(friendship_graph(seed++, static_cast<int>(state.range(0)), 74));
}
BENCHMARK(BM_FriendshipGraph)->Arg(3)->Arg(73);

}  // namespace
