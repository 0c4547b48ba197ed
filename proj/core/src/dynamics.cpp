#include "schelling/dynamics.hpp"

#include <algorithm>
#include <string>

#include "schelling/errors.hpp"

namespace schelling {

std::string_view to_string(StopReason r) noexcept {
  switch (r) {
    case StopReason::Converged:
      return "converged";
    case StopReason::LoopDetected:
      return "loop_detected";
    case StopReason::IterationCap:
      return "iteration_cap";
  }
  return "?";
}

std::uint64_t fingerprint(const Configuration& config) noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (AgentId a : config.occupancy()) {
    h = mix64(h ^ static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)));
  }
  return h;
}

SimState::SimState(Configuration initial) : config_(std::move(initial)) { remember_current(); }

bool SimState::remember_current() {
  const auto occ = config_.occupancy();
  auto& bucket = seen_[fingerprint(config_)];
  for (std::size_t idx : bucket) {
    const auto& snap = snapshots_[idx];
    if (std::equal(snap.begin(), snap.end(), occ.begin(), occ.end())) return true;
  }
  bucket.push_back(snapshots_.size());
  snapshots_.emplace_back(occ.begin(), occ.end());
  return false;
}

bool SimState::relocate(AgentId agent, int destination) {
  config_.move(agent, destination);
  ++iterations_;
  movers_.insert(agent);
  return remember_current();
}

ImprovementOptions improvement_options(AgentId agent, const Configuration& config, const Model& model) {
  const TorusGrid& grid = model.grid;
  ImprovementOptions out;
  out.current_utility =
      total_utility(agent, grid.cell(config.cell_of(agent)), config, grid, model.graph, model.params).total;

  double best = -1.0;
  std::vector<std::pair<int, double>> scored;
  scored.reserve(static_cast<std::size_t>(config.empty_count()));
  for (int id = 1; id <= config.cell_count(); ++id) {
    if (!config.is_empty(id)) continue;
    const double u = total_utility(agent, grid.cell(id), config, grid, model.graph, model.params).total;
    scored.emplace_back(id, u);
    best = std::max(best, u);
  }
  out.best_utility = best;
  if (scored.empty() || !(best > out.current_utility + kUtilityTolerance)) return out;
  for (const auto& [id, u] : scored) {
    if (u >= best - kUtilityTolerance) out.best_cells.push_back(id);
  }
  return out;
}

namespace {

int pick(const std::vector<int>& ties, Rng& rng) {
  return ties.size() == 1 ? ties.front() : ties[rng.uniform_index(ties.size())];
}

struct MoverChoice {
  AgentId agent = kNoAgent;
  ImprovementOptions options;
};

std::optional<MoverChoice> choose_mover(const Configuration& config, const Model& model, Rng& rng) {
  std::vector<ImprovementOptions> options(static_cast<std::size_t>(config.agent_count()));
  double saddest = 2.0;
  for (AgentId a = 1; a <= config.agent_count(); ++a) {
    auto& opt = options[static_cast<std::size_t>(a - 1)];
    opt = improvement_options(a, config, model);
    if (opt.improvable()) saddest = std::min(saddest, opt.current_utility);
  }
  std::vector<AgentId> ties;
  for (AgentId a = 1; a <= config.agent_count(); ++a) {
    const auto& opt = options[static_cast<std::size_t>(a - 1)];
    if (opt.improvable() && opt.current_utility <= saddest + kUtilityTolerance) ties.push_back(a);
  }
  if (ties.empty()) return std::nullopt;
  const AgentId chosen = pick(ties, rng);
  return MoverChoice{chosen, std::move(options[static_cast<std::size_t>(chosen - 1)])};
}

}  // namespace

std::optional<Improvement> best_improvement(AgentId agent, const SimState& state, const Model& model, Rng& rng) {
  const auto opt = improvement_options(agent, state.config(), model);
  if (!opt.improvable()) return std::nullopt;
  return Improvement{model.grid.cell(pick(opt.best_cells, rng)), opt.best_utility};
}

std::optional<AgentId> select_mover(const SimState& state, const Model& model, Rng& rng) {
  auto choice = choose_mover(state.config(), model, rng);
  if (!choice) return std::nullopt;
  return choice->agent;
}

std::optional<StopReason> step(SimState& state, const Model& model, Rng& rng, const TraceSink& trace) {
  auto choice = choose_mover(state.config(), model, rng);
  if (!choice) return StopReason::Converged;

  const int origin = state.config().cell_of(choice->agent);
  const int destination = pick(choice->options.best_cells, rng);
  if (!state.config().is_empty(destination)) {
    throw InvariantViolation("destination " + std::to_string(destination) + " is not empty");
  }
  const bool revisited = state.relocate(choice->agent, destination);
  if (trace) {
    trace(StepRecord{state.iterations(), choice->agent, origin, destination, choice->options.current_utility,
                     choice->options.best_utility});
  }
  if (revisited) return StopReason::LoopDetected;
  return std::nullopt;
}

int default_max_iterations(const TorusGrid& grid) noexcept { return 10 * grid.cell_count(); }

RunResult run(Configuration initial, const Model& model, int max_iter, std::uint64_t run_seed,
              const TraceSink& trace) {
  if (max_iter < 1) throw DomainError("max_iter must be at least 1");
  SimState state(std::move(initial));
  Rng rng(run_seed);
  for (;;) {
    if (auto reason = step(state, model, rng, trace)) return RunResult{std::move(state), *reason};
    if (state.iterations() >= max_iter) return RunResult{std::move(state), StopReason::IterationCap};
  }
}

}  // namespace schelling
