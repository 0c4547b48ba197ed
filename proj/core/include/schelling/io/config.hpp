#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "schelling/harness.hpp"

namespace schelling::io {

/// Output formats requested by a config file.
struct OutputOptions {
  std::filesystem::path directory;  // empty: caller decides (flag, env var, cwd)
  bool csv = true;
  bool svg = true;
};

/// A parsed INI-style run configuration.
///
///   [grid]        n
///   [population]  reds, blues
///   [network]     k, repermute
///   [utility]     x, alpha, beta, gamma, c_bar, color_variant
///   [process]     max_iter, H, base_seed
///   [sweep]       axis, values
///   [output]      directory, formats
///
/// Every key is optional; each default that gets used is reported in
/// `notices`. Unknown sections or keys are errors.
struct RunConfig {
  ExperimentSpec spec;
  bool has_sweep = false;
  OutputOptions output;
  std::vector<std::string> notices;
};

/// Throws ConfigError naming the offending key or value.
[[nodiscard]] RunConfig parse_run_config(std::string_view text, std::string name = "custom");
[[nodiscard]] RunConfig load_run_config(const std::filesystem::path& path);

/// Sweep values: comma list ("0, 0.5, 1"), inclusive range ("0:1:0.05"), or
/// "default" for the 21-point unit grid.
[[nodiscard]] std::vector<double> parse_sweep_values(std::string_view text);

/// INI text that reproduces `spec` when parsed.
[[nodiscard]] std::string render_run_config(const ExperimentSpec& spec);

}  // namespace schelling::io
