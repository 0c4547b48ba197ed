#include <benchmark/benchmark.h>

#include "schelling/dynamics.hpp"

using namespace schelling;

namespace {

void BM_ImprovementOptions(benchmark::State& state) {
  const TorusGrid grid(10);
  const auto config = init_configuration(1, grid, 37, 37);
  const auto graph = friendship_graph(1, static_cast<int>(state.range(0)), 74);
  UtilityParams params;
  params.alpha = 0.5;
  const Model model{grid, graph, params};
  AgentId agent = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(improvement_options(agent, config, model));
    agent = agent % 74 + 1;
  }
}
BENCHMARK(BM_ImprovementOptions)->Arg(0)->Arg(3)->Arg(73);

void BM_FullRun(benchmark::State& state) {
  const TorusGrid grid(10);
  const auto graph = friendship_graph(1, static_cast<int>(state.range(0)), 74);
  UtilityParams params;
  params.x = 0.75;
  params.alpha = state.range(0) == 0 ? 1.0 : 0.5;
  const Model model{grid, graph, params};
  std::uint64_t seed = 0;
  for (auto _ : state) {
    auto result = run(init_configuration(seed, grid, 37, 37), model, default_max_iterations(grid), seed);
    benchmark::DoNotOptimize(result.state.iterations());
    ++seed;
  }
}
BENCHMARK(BM_FullRun)->Arg(0)->Arg(3)->Unit(benchmark::kMillisecond);

}  // namespace
