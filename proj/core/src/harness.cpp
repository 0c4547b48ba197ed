#include "schelling/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <map>
#include <thread>

#include "schelling/errors.hpp"
#include "schelling/rng.hpp"

namespace schelling {

std::string_view to_string(SweepAxis a) noexcept {
  switch (a) {
    case SweepAxis::X:
      return "x";
    case SweepAxis::Beta:
      return "beta";
    case SweepAxis::K:
      return "k";
  }
  return "?";
}

SweepAxis parse_sweep_axis(std::string_view text) {
  if (text == "x") return SweepAxis::X;
  if (text == "beta") return SweepAxis::Beta;
  if (text == "k") return SweepAxis::K;
  throw ConfigError("unknown sweep axis '" + std::string(text) + "' (expected x, beta or k)");
}

UtilityParams ExperimentSpec::params_at(double value) const {
  UtilityParams p = params;
  if (axis == SweepAxis::X) p.x = value;
  if (axis == SweepAxis::Beta) p.beta = value;
  return p;
}

int ExperimentSpec::degree_at(double value) const {
  return axis == SweepAxis::K ? static_cast<int>(std::lround(value)) : k;
}

void ExperimentSpec::validate() const {
  const std::string where = "experiment '" + name + "': ";
  if (n < 3) throw ConfigError(where + "grid side n must be at least 3");
  if (reds < 0 || blues < 0) throw ConfigError(where + "population counts must be non-negative");
  if (reds + blues > n * n - 1) throw ConfigError(where + "population does not leave an empty cell");
  if (replicates < 1) throw ConfigError(where + "H must be at least 1");
  if (max_iter < 0) throw ConfigError(where + "max_iter must be non-negative");
  if (values.empty()) throw ConfigError(where + "sweep needs at least one value");
  const int population = reds + blues;
  for (double v : values) {
    if (!std::isfinite(v)) throw ConfigError(where + "non-finite sweep value");
    if (axis == SweepAxis::K && (v != std::floor(v) || v < 0 || v > population - 1)) {
      throw ConfigError(where + "sweep value k=" + std::to_string(v) + " is not an integer in [0, " +
                        std::to_string(population - 1) + "]");
    }
    try {
      params_at(v).validate();
    } catch (const DomainError& e) {
      throw ConfigError(where + e.what());
    }
    const int degree = degree_at(v);
    if (degree < 0 || degree > std::max(0, population - 1)) {
      throw ConfigError(where + "degree k=" + std::to_string(degree) + " out of range");
    }
    if (degree > 0 && population % 2 != 0) {
      throw ConfigError(where + "a k-regular friendship graph with k > 0 needs an even population");
    }
  }
}

ReplicateSeeds replicate_seeds(const ExperimentSpec& spec, int replicate, std::size_t point_index) {
  const auto h = static_cast<std::uint64_t>(replicate);
  const std::uint64_t salt = spec.repermute_network ? static_cast<std::uint64_t>(point_index) + 1 : 0;
  return {derive_seed(spec.base_seed, h, StreamTag::Placement), derive_seed(spec.base_seed, h, StreamTag::Friendship, salt),
          derive_seed(spec.base_seed, h, StreamTag::Run)};
}

OutcomeRecord run_replicate(const ExperimentSpec& spec, std::size_t point_index, int replicate) {
  const double value = spec.values.at(point_index);
  const TorusGrid grid(spec.n);
  const UtilityParams params = spec.params_at(value);
  const auto seeds = replicate_seeds(spec, replicate, point_index);
  const FriendshipGraph graph = friendship_graph(seeds.friendship, spec.degree_at(value), spec.reds + spec.blues);
  const Model model{grid, graph, params};
  auto result = run(init_configuration(seeds.placement, grid, spec.reds, spec.blues), model,
                    spec.effective_max_iter(), seeds.run);
  return measure(result, model);
}

std::array<double, kOutcomeFieldCount> outcome_values(const OutcomeRecord& r) noexcept {
  return {static_cast<double>(r.iterations),
          static_cast<double>(r.movers),
          r.fsi,
          r.moran,
          r.geary,
          r.avg_welfare,
          r.total_welfare,
          r.welfare_color_part,
          r.welfare_friend_part};
}

namespace {

std::size_t field_index(std::string_view field) {
  const auto it = std::find(kOutcomeFields.begin(), kOutcomeFields.end(), field);
  if (it == kOutcomeFields.end()) throw DomainError("unknown outcome field '" + std::string(field) + "'");
  return static_cast<std::size_t>(it - kOutcomeFields.begin());
}

}  // namespace

double Summary::mean_of(std::string_view field) const { return mean[field_index(field)]; }
double Summary::sd_of(std::string_view field) const { return sd[field_index(field)]; }

Summary aggregate(std::span<const RunRow> rows) {
  if (rows.empty()) throw DomainError("cannot aggregate an empty list of records");
  std::vector<RunRow> sorted(rows.begin(), rows.end());
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const RunRow& a, const RunRow& b) { return a.replicate < b.replicate; });
  Summary s;
  s.count = sorted.size();
  const double count = static_cast<double>(sorted.size());
  for (const auto& row : sorted) {
    const auto v = outcome_values(row.record);
    for (std::size_t f = 0; f < kOutcomeFieldCount; ++f) s.mean[f] += v[f];
  }
  for (auto& m : s.mean) m /= count;
  if (sorted.size() > 1) {
    for (const auto& row : sorted) {
      const auto v = outcome_values(row.record);
      for (std::size_t f = 0; f < kOutcomeFieldCount; ++f) s.sd[f] += (v[f] - s.mean[f]) * (v[f] - s.mean[f]);
    }
    for (auto& d : s.sd) d = std::sqrt(d / (count - 1.0));
  }
  return s;
}

SweepResult run_experiment(const ExperimentSpec& spec, unsigned threads) {
  spec.validate();
  const std::size_t points = spec.values.size();
  const std::size_t per_point = static_cast<std::size_t>(spec.replicates);
  const std::size_t jobs = points * per_point;
  std::vector<OutcomeRecord> records(jobs);

  // Each job writes only its own slot, so the schedule cannot affect results.
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t j = next.fetch_add(1); j < jobs; j = next.fetch_add(1)) {
      records[j] = run_replicate(spec, j / per_point, static_cast<int>(j % per_point) + 1);
    }
  };
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, jobs));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  SweepResult out{spec, {}};
  out.points.reserve(points);
  for (std::size_t p = 0; p < points; ++p) {
    SweepPoint point;
    point.value = spec.values[p];
    point.rows.reserve(per_point);
    for (std::size_t h = 0; h < per_point; ++h) {
      point.rows.push_back(RunRow{static_cast<int>(h) + 1, records[p * per_point + h]});
    }
    point.summary = aggregate(point.rows);
    out.points.push_back(std::move(point));
  }
  return out;
}

std::vector<double> unit_grid(int intervals) {
  std::vector<double> grid;
  grid.reserve(static_cast<std::size_t>(intervals) + 1);
  for (int i = 0; i <= intervals; ++i) grid.push_back(static_cast<double>(i) / intervals);
  return grid;
}

namespace {

ExperimentSpec base_spec(std::string name, SweepAxis axis) {
  ExperimentSpec s;
  s.name = std::move(name);
  s.axis = axis;
  s.values = unit_grid();
  return s;
}

// beta sweep at x = 1, alpha = 1, no friends.
ExperimentSpec cost_sweep(std::string name, CostMode mode, double c_bar) {
  auto s = base_spec(std::move(name), SweepAxis::Beta);
  s.params.x = 1.0;
  s.params.alpha = 1.0;
  s.params.cost_mode = mode;
  s.params.c_bar = c_bar;
  return s;
}

// x sweep at beta = 0.5, c_bar = 0.5.
ExperimentSpec network_cost_sweep(std::string name, CostMode mode, double alpha, int k) {
  auto s = base_spec(std::move(name), SweepAxis::X);
  s.params.beta = 0.5;
  s.params.alpha = alpha;
  s.params.cost_mode = mode;
  s.params.c_bar = 0.5;
  s.k = k;
  return s;
}

const std::map<std::string, ExperimentSpec, std::less<>>& preset_table() {
  static const auto table = [] {
    std::map<std::string, ExperimentSpec, std::less<>> t;
    auto add = [&t](ExperimentSpec s) {
      auto key = s.name;
      t.emplace(std::move(key), std::move(s));
    };
    {
      auto s = base_spec("baseline", SweepAxis::X);
      s.params.alpha = 1.0;
      s.params.beta = 1.0;
      add(std::move(s));
    }
    add(cost_sweep("cost-fixed-fair", CostMode::Fixed, 0.5));
    add(cost_sweep("cost-var-fair", CostMode::Variable, 0.5));
    add(cost_sweep("cost-fixed-low", CostMode::Fixed, 0.01));
    add(cost_sweep("cost-var-low", CostMode::Variable, 0.01));
    add(cost_sweep("cost-fixed-high", CostMode::Fixed, 0.99));
    add(cost_sweep("cost-var-high", CostMode::Variable, 0.99));
    {
      auto s = base_spec("net-nocost", SweepAxis::X);
      s.params.beta = 1.0;
      s.params.alpha = 0.5;
      s.k = 3;
      add(std::move(s));
    }
    add(network_cost_sweep("net-cost-fixed", CostMode::Fixed, 0.5, 3));
    add(network_cost_sweep("net-cost-var", CostMode::Variable, 0.5, 3));
    add(network_cost_sweep("net-cost-fixed-nofriends", CostMode::Fixed, 1.0, 0));
    add(network_cost_sweep("net-cost-var-nofriends", CostMode::Variable, 1.0, 0));
    {
      auto s = base_spec("degree-sweep", SweepAxis::K);
      s.params.x = 1.0;
      s.params.beta = 1.0;
      s.params.alpha = 0.5;
      s.values.clear();
      for (int k = 0; k <= 73; ++k) s.values.push_back(k);
      add(std::move(s));
    }
    return t;
  }();
  return table;
}

}  // namespace

std::vector<std::string> preset_names() {
  std::vector<std::string> names;
  for (const auto& [name, spec] : preset_table()) names.push_back(name);
  return names;
}

ExperimentSpec preset(std::string_view name) {
  const auto& table = preset_table();
  if (auto it = table.find(name); it != table.end()) return it->second;
  std::string known;
  for (const auto& [n, s] : table) known += (known.empty() ? "" : ", ") + n;
  throw ConfigError("unknown preset '" + std::string(name) + "'; known presets: " + known);
}

}  // namespace schelling
