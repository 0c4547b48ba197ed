#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "schelling/dynamics.hpp"
#include "schelling/harness.hpp"
#include "schelling/population.hpp"

namespace schelling::io {

/// Shortest decimal text that parses back to exactly `v` ("nan" for NaN).
[[nodiscard]] std::string format_number(double v);
/// Inverse of format_number. Throws ConfigError on trailing garbage.
[[nodiscard]] double parse_number(std::string_view text);

/// One aggregate row: sweep value, then mean and sd per outcome field.
struct SweepCsvRow {
  double sweep_value = 0.0;
  std::array<double, kOutcomeFieldCount> mean{};
  std::array<double, kOutcomeFieldCount> sd{};
};

/// "sweep_value,iterations_mean,iterations_sd,movers_mean,..." (no newline).
[[nodiscard]] std::string sweep_csv_header();
[[nodiscard]] std::vector<SweepCsvRow> sweep_rows(const SweepResult& result);
[[nodiscard]] std::string emit_sweep_csv(std::span<const SweepCsvRow> rows);
[[nodiscard]] std::string emit_sweep_csv(const SweepResult& result);
/// Strict: header must match exactly and every row must have every column.
[[nodiscard]] std::vector<SweepCsvRow> parse_sweep_csv(std::string_view text);

/// Per-replicate rows: sweep_value, replicate, the nine outcomes, stop_reason.
[[nodiscard]] std::string emit_runs_csv(const SweepResult& result);

/// Snapshot of agent positions: agent,color,row,col.
[[nodiscard]] std::string emit_cells_csv(const Configuration& config, const TorusGrid& grid);
[[nodiscard]] Configuration parse_cells_csv(std::string_view text, const TorusGrid& grid);

/// Friendship edge list: a,b.
[[nodiscard]] std::string emit_edges_csv(const FriendshipGraph& graph);
[[nodiscard]] std::vector<Edge> parse_edges_csv(std::string_view text);

/// Per-step trace: t,mover,origin_row,origin_col,destination_row,destination_col,utility_before,utility_after.
[[nodiscard]] std::string trace_csv_header();
[[nodiscard]] std::string trace_csv_line(const StepRecord& rec, const TorusGrid& grid);

/// Writes `content` to a temporary sibling and renames it over `path`.
/// Throws ConfigError when the directory is not writable.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);
/// Throws ConfigError when the file cannot be read.
[[nodiscard]] std::string read_file(const std::filesystem::path& path);

}  // namespace schelling::io
