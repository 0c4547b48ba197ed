// Command-line front end: single runs, configured sweeps, named presets and
// SVG rendering of their outputs.

#include <CLI11.hpp>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include "schelling/dynamics.hpp"
#include "schelling/errors.hpp"
#include "schelling/harness.hpp"
#include "schelling/io/config.hpp"
#include "schelling/io/csv.hpp"
#include "schelling/io/svg.hpp"
#include "schelling/metrics.hpp"

namespace fs = std::filesystem;
using namespace schelling;

namespace {

constexpr const char* kOutputEnv = "SCHELLING_OUTPUT_DIR";

fs::path resolve_output_dir(const std::string& flag, const fs::path& configured) {
  if (!flag.empty()) return flag;
  if (!configured.empty()) return configured;
  if (const char* env = std::getenv(kOutputEnv); env && *env) return env;
  return ".";
}

void print_notices(const io::RunConfig& cfg) {
  for (const auto& n : cfg.notices) std::cerr << "notice: " << n << "\n";
}

std::string outcome_table(const OutcomeRecord& r) {
  std::string out;
  const auto values = outcome_values(r);
  for (std::size_t f = 0; f < kOutcomeFieldCount; ++f) {
    out += std::string(kOutcomeFields[f]) + " = " + io::format_number(values[f]) + "\n";
  }
  out += "stop_reason = " + std::string(to_string(r.stop_reason)) + "\n";
  return out;
}

void write_sweep_outputs(const SweepResult& result, const fs::path& dir, const std::string& stem,
                         const io::OutputOptions& formats) {
  const auto rows = io::sweep_rows(result);
  if (formats.csv) {
    io::write_file_atomic(dir / (stem + ".csv"), io::emit_sweep_csv(rows));
    io::write_file_atomic(dir / (stem + "_runs.csv"), io::emit_runs_csv(result));
  }
  if (formats.svg) {
    io::ChartOptions chart;
    chart.title = result.spec.name;
    chart.axis_label = std::string(to_string(result.spec.axis));
    io::write_file_atomic(dir / (stem + ".svg"), io::render_sweep_chart(rows, chart));
  }
}

int cmd_run(const std::string& config_path, bool trace, int replicate, const std::string& out_flag) {
  const auto cfg = io::load_run_config(config_path);
  print_notices(cfg);
  const ExperimentSpec& spec = cfg.spec;
  if (replicate < 1) throw ConfigError("--replicate must be at least 1");
  if (spec.values.size() != 1) {
    std::cerr << "notice: run uses only the first sweep value (" << io::format_number(spec.values.front()) << ")\n";
  }
  const fs::path dir = resolve_output_dir(out_flag, cfg.output.directory);

  const TorusGrid grid(spec.n);
  const double value = spec.values.front();
  const UtilityParams params = spec.params_at(value);
  const auto seeds = replicate_seeds(spec, replicate, 0);
  const FriendshipGraph graph = friendship_graph(seeds.friendship, spec.degree_at(value), spec.reds + spec.blues);
  const Model model{grid, graph, params};
  Configuration initial = init_configuration(seeds.placement, grid, spec.reds, spec.blues);

  std::string trace_text = io::trace_csv_header() + "\n";
  TraceSink sink;
  if (trace) sink = [&](const StepRecord& rec) { trace_text += io::trace_csv_line(rec, grid) + "\n"; };
  const Configuration initial_copy = initial;
  const auto result = run(std::move(initial), model, spec.effective_max_iter(), seeds.run, sink);
  const auto record = measure(result, model);

  std::cout << outcome_table(record);
  if (trace) io::write_file_atomic(dir / "trace.csv", trace_text);
  if (cfg.output.csv) {
    io::write_file_atomic(dir / "initial_cells.csv", io::emit_cells_csv(initial_copy, grid));
    io::write_file_atomic(dir / "final_cells.csv", io::emit_cells_csv(result.state.config(), grid));
    io::write_file_atomic(dir / "edges.csv", io::emit_edges_csv(graph));
    io::write_file_atomic(dir / "outcome.txt", outcome_table(record));
  }
  if (cfg.output.svg) {
    const auto initial_w = welfare(initial_copy, model);
    const auto initial_fsi = freeman_index(initial_copy, grid);
    io::write_file_atomic(dir / "initial.svg",
                          io::render_grid_snapshot(initial_copy, grid, graph,
                                                   {initial_w.total, initial_fsi.value}));
    io::write_file_atomic(dir / "final.svg",
                          io::render_grid_snapshot(result.state.config(), grid, graph,
                                                   {record.total_welfare, record.fsi}));
  }
  return 0;
}

int cmd_sweep(const std::string& config_path, unsigned threads, const std::string& out_flag) {
  const auto cfg = io::load_run_config(config_path);
  print_notices(cfg);
  if (!cfg.has_sweep) throw ConfigError(config_path + " has no [sweep] section");
  const fs::path dir = resolve_output_dir(out_flag, cfg.output.directory);
  const auto result = run_experiment(cfg.spec, threads);
  write_sweep_outputs(result, dir, cfg.spec.name, cfg.output);
  std::cout << "wrote " << (dir / cfg.spec.name).string() << ".{csv,svg}\n";
  return 0;
}

struct ReplicateOverrides {
  std::optional<int> replicates;
  std::optional<std::uint64_t> base_seed;
  std::string values;
};

int cmd_replicate(const std::string& name, const ReplicateOverrides& over, unsigned threads,
                  const std::string& out_flag, bool print_config) {
  ExperimentSpec spec = preset(name);
  if (over.replicates) spec.replicates = *over.replicates;
  if (over.base_seed) spec.base_seed = *over.base_seed;
  if (!over.values.empty()) spec.values = io::parse_sweep_values(over.values);
  if (print_config) {
    std::cout << io::render_run_config(spec);
    return 0;
  }
  const fs::path dir = resolve_output_dir(out_flag, {});
  const auto result = run_experiment(spec, threads);
  write_sweep_outputs(result, dir, spec.name, io::OutputOptions{});
  io::write_file_atomic(dir / (spec.name + ".ini"), io::render_run_config(spec));
  std::cout << "wrote " << (dir / spec.name).string() << ".{csv,svg,ini}\n";
  return 0;
}

struct RenderArgs {
  std::string csv;
  std::string cells;
  std::string edges;
  std::string config;
  std::string output;
  std::string title;
  std::string axis_label = "sweep value";
  int n = 10;
  bool no_stack = false;
};

int cmd_render(const RenderArgs& a) {
  if (a.csv.empty() == a.cells.empty()) throw ConfigError("render needs exactly one of a sweep CSV or --cells");
  std::string svg;
  if (!a.csv.empty()) {
    const auto rows = io::parse_sweep_csv(io::read_file(a.csv));
    io::ChartOptions chart;
    chart.title = a.title;
    chart.axis_label = a.axis_label;
    chart.stack_welfare = !a.no_stack;
    svg = io::render_sweep_chart(rows, chart);
  } else {
    const TorusGrid grid(a.n);
    const auto config = io::parse_cells_csv(io::read_file(a.cells), grid);
    const int population = config.agent_count();
    std::optional<FriendshipGraph> graph;
    if (a.edges.empty()) {
      graph.emplace(empty_friendship_graph(population));
    } else {
      const auto edges = io::parse_edges_csv(io::read_file(a.edges));
      const int degree = population > 0 ? static_cast<int>(2 * edges.size() / static_cast<std::size_t>(population)) : 0;
      graph.emplace(population, degree, edges);
    }
    io::SnapshotAnnotation note;
    if (config.count(Color::Red) > 0 && config.count(Color::Blue) > 0) note.fsi = freeman_index(config, grid).value;
    if (!a.config.empty()) {
      const auto cfg = io::load_run_config(a.config);
      const UtilityParams params = cfg.spec.params_at(cfg.spec.values.front());
      note.total_welfare = welfare(config, Model{grid, *graph, params}).total;
    }
    svg = io::render_grid_snapshot(config, grid, *graph, note);
  }
  const fs::path out = a.output.empty() ? fs::path(a.csv.empty() ? "snapshot.svg" : fs::path(a.csv).replace_extension(".svg"))
                                        : fs::path(a.output);
  io::write_file_atomic(out, svg);
  std::cout << "wrote " << out.string() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Schelling segregation with friendship networks and moving costs"};
  app.require_subcommand(1);

  std::string out_flag;
  unsigned threads = 1;

  auto* run_cmd = app.add_subcommand("run", "Run one simulation from a config file");
  std::string run_config;
  bool trace = false;
  int replicate = 1;
  run_cmd->add_option("config", run_config, "Config file")->required()->check(CLI::ExistingFile);
  run_cmd->add_flag("--trace", trace, "Write the per-step trace to trace.csv");
  run_cmd->add_option("--replicate", replicate, "Replicate index h whose seeds are used")->capture_default_str();
  run_cmd->add_option("-o,--out", out_flag, "Output directory");

  auto* sweep_cmd = app.add_subcommand("sweep", "Run the sweep described by a config file");
  std::string sweep_config;
  sweep_cmd->add_option("config", sweep_config, "Config file")->required()->check(CLI::ExistingFile);
  sweep_cmd->add_option("-o,--out", out_flag, "Output directory");
  sweep_cmd->add_option("-j,--threads", threads, "Worker threads (0 = all cores)")->capture_default_str();

  auto* rep_cmd = app.add_subcommand("replicate", "Run a named experiment preset");
  std::string preset_name;
  ReplicateOverrides over;
  bool print_config = false;
  int replicates_flag = 0;
  std::uint64_t seed_flag = 0;
  rep_cmd->add_option("preset", preset_name, "Preset name (see `presets`)")->required();
  rep_cmd->add_option("-o,--out", out_flag, "Output directory");
  rep_cmd->add_option("-j,--threads", threads, "Worker threads (0 = all cores)")->capture_default_str();
  auto* h_opt = rep_cmd->add_option("-H,--replicates", replicates_flag, "Override the number of seeds");
  auto* seed_opt = rep_cmd->add_option("--base-seed", seed_flag, "Override the base seed");
  rep_cmd->add_option("--values", over.values, "Override sweep values (list, start:stop:step or default)");
  rep_cmd->add_flag("--print-config", print_config, "Print the preset as a config file and exit");

  auto* render_cmd = app.add_subcommand("render", "Render a sweep CSV or a grid snapshot to SVG");
  RenderArgs render_args;
  render_cmd->add_option("csv", render_args.csv, "Sweep CSV")->check(CLI::ExistingFile);
  render_cmd->add_option("--cells", render_args.cells, "Snapshot cells CSV (agent,color,row,col)")
      ->check(CLI::ExistingFile);
  render_cmd->add_option("--edges", render_args.edges, "Friendship edges CSV (a,b)")->check(CLI::ExistingFile);
  render_cmd->add_option("--config", render_args.config, "Config whose utility parameters annotate welfare")
      ->check(CLI::ExistingFile);
  render_cmd->add_option("--n", render_args.n, "Grid side for snapshots")->capture_default_str();
  render_cmd->add_option("-o,--output", render_args.output, "Output SVG path");
  render_cmd->add_option("--title", render_args.title, "Chart title");
  render_cmd->add_option("--axis-label", render_args.axis_label, "Horizontal axis label");
  render_cmd->add_flag("--no-stack", render_args.no_stack, "Do not stack welfare components");

  auto* presets_cmd = app.add_subcommand("presets", "List experiment presets");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run_cmd) return cmd_run(run_config, trace, replicate, out_flag);
    if (*sweep_cmd) return cmd_sweep(sweep_config, threads, out_flag);
    if (*rep_cmd) {
      if (*h_opt) over.replicates = replicates_flag;
      if (*seed_opt) over.base_seed = seed_flag;
      return cmd_replicate(preset_name, over, threads, out_flag, print_config);
    }
    if (*render_cmd) return cmd_render(render_args);
    if (*presets_cmd) {
      for (const auto& name : preset_names()) std::cout << name << "\n";
      return 0;
    }
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
