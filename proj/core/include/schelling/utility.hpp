#pragma once

#include <string_view>

#include "schelling/geometry.hpp"
#include "schelling/population.hpp"

namespace schelling {

/// How the own-color share is turned into a color utility.
enum class ColorVariant {
  LiteralStrict,        // xi * 1{xi > x}
  LiteralNonStrict,     // xi * 1{xi >= x}
  ThresholdSaturating,  // 1 if xi >= x, otherwise xi
};

/// Whether a move costs the same everywhere or scales with distance.
enum class CostMode { Variable = 0, Fixed = 1 };

[[nodiscard]] std::string_view to_string(ColorVariant v) noexcept;
[[nodiscard]] std::string_view to_string(CostMode m) noexcept;
/// Accepts the enumerator names as well as snake_case spellings
/// ("threshold_saturating"). Throws ConfigError otherwise.
[[nodiscard]] ColorVariant parse_color_variant(std::string_view text);

struct UtilityWeights {
  double color = 1.0;
  double friendship = 0.0;
  double moving = 0.0;
};

struct UtilityParams {
  double x = 0.5;      // Schelling threshold
  double alpha = 1.0;  // color vs friendship split
  double beta = 1.0;   // location vs moving cost split
  CostMode cost_mode = CostMode::Fixed;
  double c_bar = 0.5;
  ColorVariant color_variant = ColorVariant::ThresholdSaturating;

  /// (beta * alpha, beta * (1 - alpha), 1 - beta).
  [[nodiscard]] UtilityWeights weights() const noexcept {
    return {beta * alpha, beta * (1.0 - alpha), 1.0 - beta};
  }

  /// Throws DomainError on any field outside its legal range.
  void validate() const;
};

struct NeighborhoodColorShares {
  double xi_red = 0.0;
  double xi_blue = 0.0;

  [[nodiscard]] double share(Color c) const noexcept { return c == Color::Red ? xi_red : xi_blue; }
};

/// Weighted contributions of the three components; `total` is their sum.
struct UtilityBreakdown {
  double color = 0.0;
  double friendship = 0.0;
  double moving = 0.0;
  double total = 0.0;
};

/// Red and blue counts around `cell` divided by 8. Empty cells count in the
/// denominator. `excluding` is never counted, so an agent evaluating a cell
/// next to its own origin does not see itself.
[[nodiscard]] NeighborhoodColorShares color_fractions(const Configuration& config, const TorusGrid& grid, CellRef cell,
                                                      AgentId excluding = kNoAgent);

/// Color utility for an own-color share `xi`.
[[nodiscard]] double color_satisfaction(double xi, double threshold, ColorVariant variant) noexcept;

[[nodiscard]] double color_utility(AgentId agent, CellRef cell, const Configuration& config, const TorusGrid& grid,
                                   const UtilityParams& params);

/// 1 minus the mean distance from `cell` to the agent's friends at their
/// current cells. 1 when the agent has no friends.
[[nodiscard]] double friend_utility(AgentId agent, CellRef cell, const Configuration& config, const TorusGrid& grid,
                                    const FriendshipGraph& graph);

/// 1 for staying put; otherwise 1 - c_bar (fixed) or 1 - c_bar * distance (variable).
[[nodiscard]] double moving_utility(AgentId agent, CellRef cell, const Configuration& config, const TorusGrid& grid,
                                    const UtilityParams& params);

[[nodiscard]] UtilityBreakdown total_utility(AgentId agent, CellRef cell, const Configuration& config,
                                             const TorusGrid& grid, const FriendshipGraph& graph,
                                             const UtilityParams& params);

}  // namespace schelling
