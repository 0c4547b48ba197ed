#include "schelling/utility.hpp"

#include <cmath>
#include <string>

#include "schelling/errors.hpp"

namespace schelling {

std::string_view to_string(ColorVariant v) noexcept {
  switch (v) {
    case ColorVariant::LiteralStrict:
      return "literal_strict";
    case ColorVariant::LiteralNonStrict:
      return "literal_non_strict";
    case ColorVariant::ThresholdSaturating:
      return "threshold_saturating";
  }
  return "?";
}

std::string_view to_string(CostMode m) noexcept { return m == CostMode::Fixed ? "fixed" : "variable"; }

ColorVariant parse_color_variant(std::string_view text) {
  if (text == "literal_strict" || text == "LiteralStrict") return ColorVariant::LiteralStrict;
  if (text == "literal_non_strict" || text == "LiteralNonStrict") return ColorVariant::LiteralNonStrict;
  if (text == "threshold_saturating" || text == "ThresholdSaturating") return ColorVariant::ThresholdSaturating;
  throw ConfigError("unknown color_variant '" + std::string(text) +
                    "' (expected literal_strict, literal_non_strict or threshold_saturating)");
}

void UtilityParams::validate() const {
  auto in_unit = [](double v) { return std::isfinite(v) && v >= 0.0 && v <= 1.0; };
  if (!in_unit(x)) throw DomainError("threshold x must lie in [0, 1], got " + std::to_string(x));
  if (!in_unit(alpha)) throw DomainError("alpha must lie in [0, 1], got " + std::to_string(alpha));
  if (!in_unit(beta)) throw DomainError("beta must lie in [0, 1], got " + std::to_string(beta));
  if (!(std::isfinite(c_bar) && c_bar > 0.0 && c_bar < 1.0)) {
    throw DomainError("c_bar must lie in (0, 1), got " + std::to_string(c_bar));
  }
}

NeighborhoodColorShares color_fractions(const Configuration& config, const TorusGrid& grid, CellRef cell,
                                        AgentId excluding) {
  int red = 0;
  int blue = 0;
  for (int id : grid.neighbor_ids(cell.id)) {
    const AgentId a = config.occupant(id);
    if (a == kNoAgent || a == excluding) continue;
    if (config.color(a) == Color::Red) {
      ++red;
    } else {
      ++blue;
    }
  }
  return {red / 8.0, blue / 8.0};
}

double color_satisfaction(double xi, double threshold, ColorVariant variant) noexcept {
  switch (variant) {
    case ColorVariant::LiteralStrict:
      return xi > threshold ? xi : 0.0;
    case ColorVariant::LiteralNonStrict:
      return xi >= threshold ? xi : 0.0;
    case ColorVariant::ThresholdSaturating:
      return xi >= threshold ? 1.0 : xi;
  }
  return 0.0;
}

double color_utility(AgentId agent, CellRef cell, const Configuration& config, const TorusGrid& grid,
                     const UtilityParams& params) {
  const double xi = color_fractions(config, grid, cell, agent).share(config.color(agent));
  return color_satisfaction(xi, params.x, params.color_variant);
}

double friend_utility(AgentId agent, CellRef cell, const Configuration& config, const TorusGrid& grid,
                      const FriendshipGraph& graph) {
  const auto friends = graph.friends(agent);
  if (friends.empty()) return 1.0;
  long steps = 0;
  for (AgentId j : friends) steps += torus_steps(grid.cell(config.cell_of(j)), cell, grid);
  const double mean = static_cast<double>(steps) / (static_cast<double>(grid.distance_scale()) *
                                                    static_cast<double>(friends.size()));
  return 1.0 - mean;
}

double moving_utility(AgentId agent, CellRef cell, const Configuration& config, const TorusGrid& grid,
                      const UtilityParams& params) {
  const int origin = config.cell_of(agent);
  if (origin == cell.id) return 1.0;
  if (params.cost_mode == CostMode::Fixed) return 1.0 - params.c_bar;
  return 1.0 - params.c_bar * torus_distance(grid.cell(origin), cell, grid);
}

UtilityBreakdown total_utility(AgentId agent, CellRef cell, const Configuration& config, const TorusGrid& grid,
                               const FriendshipGraph& graph, const UtilityParams& params) {
  const UtilityWeights w = params.weights();
  UtilityBreakdown out;
  // Zero-weight components are skipped: they cannot change the total.
  if (w.color != 0.0) out.color = w.color * color_utility(agent, cell, config, grid, params);
  if (w.friendship != 0.0) out.friendship = w.friendship * friend_utility(agent, cell, config, grid, graph);
  if (w.moving != 0.0) out.moving = w.moving * moving_utility(agent, cell, config, grid, params);
  out.total = out.color + out.friendship + out.moving;
  return out;
}

}  // namespace schelling
