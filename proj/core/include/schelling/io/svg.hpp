#pragma once

#include <optional>
#include <span>
#include <string>

#include "schelling/io/csv.hpp"
#include "schelling/population.hpp"

namespace schelling::io {

struct ChartOptions {
  std::string title;
  std::string axis_label = "sweep value";
  /// Stack the color and friendship welfare parts under the welfare curves.
  bool stack_welfare = true;
};

/// Panel geometry, shared with tests that map SVG coordinates back to data.
inline constexpr double kPanelWidth = 300.0;
inline constexpr double kPanelHeight = 200.0;
inline constexpr double kPanelMarginLeft = 60.0;
inline constexpr double kPanelMarginTop = 50.0;
inline constexpr double kPanelGapX = 90.0;
inline constexpr double kPanelGapY = 90.0;

/// Six panels, three per row: iterations, Moran's I, FSI on top; movers,
/// average welfare, total welfare below. Means are bold polylines, mean +/- sd
/// a shaded band bounded by dashed lines. Throws ConfigError on zero rows.
[[nodiscard]] std::string render_sweep_chart(std::span<const SweepCsvRow> rows, const ChartOptions& options = {});

struct SnapshotAnnotation {
  std::optional<double> total_welfare;
  std::optional<double> fsi;
};

/// The lattice with red and blue agents labeled by id, empty cells blank, and
/// friendship edges overlaid when the graph has any.
[[nodiscard]] std::string render_grid_snapshot(const Configuration& config, const TorusGrid& grid,
                                               const FriendshipGraph& graph, const SnapshotAnnotation& note = {});

}  // namespace schelling::io
