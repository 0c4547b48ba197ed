#pragma once

#include <span>
#include <vector>

#include "schelling/dynamics.hpp"
#include "schelling/geometry.hpp"
#include "schelling/population.hpp"
#include "schelling/utility.hpp"

namespace schelling {

/// Agents as nodes, an edge between every pair sitting in Moore-adjacent cells.
class ContiguityGraph {
 public:
  /// Explicit instance. Edges are undirected; self-loops and duplicates are rejected.
  ContiguityGraph(std::vector<Color> colors, std::span<const Edge> edges);

  [[nodiscard]] int agent_count() const noexcept { return static_cast<int>(colors_.size()); }
  [[nodiscard]] Color color(AgentId a) const { return colors_[static_cast<std::size_t>(a - 1)]; }
  [[nodiscard]] int count(Color c) const noexcept;
  /// Undirected edges (first < second), sorted.
  [[nodiscard]] const std::vector<Edge>& edges() const noexcept { return edges_; }
  /// w_ij in {0, 1}; w_ii = 0.
  [[nodiscard]] int weight(AgentId i, AgentId j) const;
  [[nodiscard]] int cross_color_edges() const noexcept;

 private:
  std::vector<Color> colors_;
  std::vector<Edge> edges_;
};

[[nodiscard]] ContiguityGraph contiguity_graph(const Configuration& config, const TorusGrid& grid);

struct FreemanIndex {
  double value = 0.0;
  /// True when there are no contiguity edges; value is then 0.
  bool degenerate = false;
  int edges = 0;
  int cross_edges = 0;
  double expected_cross_edges = 0.0;
};

/// Reduction in cross-color contiguity relative to color-blind expectation,
/// clamped below at 0. Throws DomainError unless both colors are present.
[[nodiscard]] FreemanIndex freeman_index(const ContiguityGraph& g);
[[nodiscard]] FreemanIndex freeman_index(const Configuration& config, const TorusGrid& grid);

/// Moran's I of the red indicator over the contiguity weights. Throws
/// DomainError on a single-color population or an edgeless graph.
[[nodiscard]] double morans_i(const ContiguityGraph& g);
[[nodiscard]] double morans_i(const Configuration& config, const TorusGrid& grid);

/// Geary's C of the red indicator; same preconditions as morans_i.
[[nodiscard]] double gearys_c(const ContiguityGraph& g);
[[nodiscard]] double gearys_c(const Configuration& config, const TorusGrid& grid);

struct Welfare {
  double average = 0.0;
  double total = 0.0;
  double color_part = 0.0;       // sum of beta * alpha * U_color
  double friendship_part = 0.0;  // sum of beta * (1 - alpha) * U_friend
  double moving_part = 0.0;      // sum of (1 - beta) * U_moving
};

/// Utilities of every agent at its own cell (so no moving cost), aggregated.
[[nodiscard]] Welfare welfare(const Configuration& config, const Model& model);

/// The per-run statistics reported for every replicate.
struct OutcomeRecord {
  int iterations = 0;
  int movers = 0;
  double fsi = 0.0;
  double moran = 0.0;  // NaN when undefined
  double geary = 0.0;  // NaN when undefined
  double avg_welfare = 0.0;
  double total_welfare = 0.0;
  double welfare_color_part = 0.0;
  double welfare_friend_part = 0.0;
  StopReason stop_reason = StopReason::Converged;
};

/// Measures a finished run on its final configuration.
[[nodiscard]] OutcomeRecord measure(const RunResult& result, const Model& model);

}  // namespace schelling
