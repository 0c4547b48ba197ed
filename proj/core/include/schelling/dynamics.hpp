#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "schelling/geometry.hpp"
#include "schelling/population.hpp"
#include "schelling/rng.hpp"
#include "schelling/utility.hpp"

namespace schelling {

/// Utilities closer than this are treated as equal: a candidate must beat the
/// status quo by more than this to count as an improvement, and maximizers
/// within this of the best value form the tie set.
inline constexpr double kUtilityTolerance = 1e-12;

enum class StopReason { Converged, LoopDetected, IterationCap };

[[nodiscard]] std::string_view to_string(StopReason r) noexcept;

/// Mutable state of one run: the configuration, the number of executed
/// relocations, who has moved, and every configuration seen so far.
class SimState {
 public:
  explicit SimState(Configuration initial);

  [[nodiscard]] const Configuration& config() const noexcept { return config_; }
  [[nodiscard]] int iterations() const noexcept { return iterations_; }
  [[nodiscard]] const std::set<AgentId>& movers() const noexcept { return movers_; }

  /// Moves `agent` to `destination` and records the new configuration.
  /// Returns true when that configuration had already been visited (confirmed
  /// by full comparison, not just by fingerprint).
  bool relocate(AgentId agent, int destination);

  [[nodiscard]] std::size_t distinct_configurations() const noexcept { return snapshots_.size(); }

 private:
  bool remember_current();

  Configuration config_;
  int iterations_ = 0;
  std::set<AgentId> movers_;
  std::unordered_map<std::uint64_t, std::vector<std::size_t>> seen_;
  std::vector<std::vector<AgentId>> snapshots_;
};

/// 64-bit fingerprint of an occupancy vector.
[[nodiscard]] std::uint64_t fingerprint(const Configuration& config) noexcept;

/// Everything the movement rule needs to know about one agent at one instant.
struct ImprovementOptions {
  double current_utility = 0.0;
  double best_utility = 0.0;
  /// Empty cells attaining best_utility, in increasing id order. Empty when no
  /// empty cell strictly beats the current cell.
  std::vector<int> best_cells;

  [[nodiscard]] bool improvable() const noexcept { return !best_cells.empty(); }
};

struct Improvement {
  CellRef cell;
  double utility = 0.0;
};

/// Shared read-only inputs of a run.
struct Model {
  const TorusGrid& grid;
  const FriendshipGraph& graph;
  const UtilityParams& params;
};

/// Evaluates `agent` at its own cell and at every empty cell. Draws nothing.
[[nodiscard]] ImprovementOptions improvement_options(AgentId agent, const Configuration& config, const Model& model);

/// Best strictly improving empty cell for `agent`, ties broken uniformly with
/// one draw from `rng` (only when there is more than one maximizer).
[[nodiscard]] std::optional<Improvement> best_improvement(AgentId agent, const SimState& state, const Model& model,
                                                          Rng& rng);

/// Among agents able to strictly improve, one with the lowest current utility;
/// ties broken uniformly with one draw from `rng` when needed.
[[nodiscard]] std::optional<AgentId> select_mover(const SimState& state, const Model& model, Rng& rng);

struct StepRecord {
  int t = 0;  // iteration index after the move (1-based)
  AgentId mover = kNoAgent;
  int origin = 0;
  int destination = 0;
  double utility_before = 0.0;
  double utility_after = 0.0;  // prospective utility at the destination, moving cost included
};

using TraceSink = std::function<void(const StepRecord&)>;

/// One relocation. Returns Converged (state untouched) when nobody can
/// improve, LoopDetected when the new configuration was seen before, nothing
/// otherwise. Per step the mover tie-break draw precedes the destination draw.
std::optional<StopReason> step(SimState& state, const Model& model, Rng& rng, const TraceSink& trace = {});

struct RunResult {
  SimState state;
  StopReason reason;
};

/// 10 * n^2.
[[nodiscard]] int default_max_iterations(const TorusGrid& grid) noexcept;

/// Steps until convergence, a revisited configuration, or `max_iter`
/// relocations. Deterministic in (initial, graph, params, run_seed).
[[nodiscard]] RunResult run(Configuration initial, const Model& model, int max_iter, std::uint64_t run_seed,
                            const TraceSink& trace = {});

}  // namespace schelling
