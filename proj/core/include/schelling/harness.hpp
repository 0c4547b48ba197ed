#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "schelling/metrics.hpp"
#include "schelling/utility.hpp"

namespace schelling {

enum class SweepAxis { X, Beta, K };

[[nodiscard]] std::string_view to_string(SweepAxis a) noexcept;
/// "x", "beta" or "k"; throws ConfigError otherwise.
[[nodiscard]] SweepAxis parse_sweep_axis(std::string_view text);

/// One experiment: a parameter swept over a grid, H seeded replicates per point.
struct ExperimentSpec {
  std::string name = "custom";
  int n = 10;
  int reds = 37;
  int blues = 37;
  int replicates = 100;
  SweepAxis axis = SweepAxis::X;
  std::vector<double> values;
  UtilityParams params;
  int k = 0;         // friendship degree when k is not the swept axis
  int max_iter = 0;  // 0 selects 10 * n^2
  std::uint64_t base_seed = 1;
  /// Draw a fresh friendship graph at every sweep point instead of once per replicate.
  bool repermute_network = false;

  /// Throws ConfigError describing the first invalid field.
  void validate() const;
  [[nodiscard]] int effective_max_iter() const noexcept { return max_iter > 0 ? max_iter : 10 * n * n; }
  /// The spec's fixed parameters with the swept parameter set to `value`.
  [[nodiscard]] UtilityParams params_at(double value) const;
  [[nodiscard]] int degree_at(double value) const;
};

/// Seeds of replicate h. Placement and the run stream never depend on the
/// sweep point, so each h starts from the same configuration everywhere.
struct ReplicateSeeds {
  std::uint64_t placement = 0;
  std::uint64_t friendship = 0;
  std::uint64_t run = 0;
};

[[nodiscard]] ReplicateSeeds replicate_seeds(const ExperimentSpec& spec, int replicate, std::size_t point_index);

/// Runs one replicate at one sweep value end to end.
[[nodiscard]] OutcomeRecord run_replicate(const ExperimentSpec& spec, std::size_t point_index, int replicate);

/// Columns shared by the aggregate CSV and the summary statistics, in order.
inline constexpr std::array<std::string_view, 9> kOutcomeFields = {
    "iterations",  "movers",        "fsi",
    "moran",       "geary",         "avg_welfare",
    "total_welfare", "welfare_color_part", "welfare_friend_part"};
inline constexpr std::size_t kOutcomeFieldCount = kOutcomeFields.size();

[[nodiscard]] std::array<double, kOutcomeFieldCount> outcome_values(const OutcomeRecord& r) noexcept;

struct RunRow {
  int replicate = 0;  // h, 1-based
  OutcomeRecord record;
};

struct Summary {
  std::array<double, kOutcomeFieldCount> mean{};
  std::array<double, kOutcomeFieldCount> sd{};  // sample sd; 0 for a single record
  std::size_t count = 0;

  [[nodiscard]] double mean_of(std::string_view field) const;
  [[nodiscard]] double sd_of(std::string_view field) const;
};

/// Field-wise mean and sample standard deviation after sorting by replicate.
/// Throws DomainError on an empty list.
[[nodiscard]] Summary aggregate(std::span<const RunRow> rows);

struct SweepPoint {
  double value = 0.0;
  Summary summary;
  std::vector<RunRow> rows;
};

struct SweepResult {
  ExperimentSpec spec;
  std::vector<SweepPoint> points;
};

/// Runs every (sweep value, replicate) job on `threads` workers (0 picks the
/// hardware concurrency). The result does not depend on the thread count.
[[nodiscard]] SweepResult run_experiment(const ExperimentSpec& spec, unsigned threads = 1);

/// {0, 0.05, ..., 1}.
[[nodiscard]] std::vector<double> unit_grid(int intervals = 20);

[[nodiscard]] std::vector<std::string> preset_names();
/// Throws ConfigError listing the known presets when `name` is unknown.
[[nodiscard]] ExperimentSpec preset(std::string_view name);

}  // namespace schelling
