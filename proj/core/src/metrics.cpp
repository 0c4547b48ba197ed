#include "schelling/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "schelling/errors.hpp"

namespace schelling {

ContiguityGraph::ContiguityGraph(std::vector<Color> colors, std::span<const Edge> edges)
    : colors_(std::move(colors)) {
  const int n = agent_count();
  edges_.reserve(edges.size());
  for (auto [a, b] : edges) {
    if (a == b || a < 1 || b < 1 || a > n || b > n) {
      throw DomainError("invalid contiguity edge (" + std::to_string(a) + ", " + std::to_string(b) + ")");
    }
    edges_.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
    throw DomainError("duplicate contiguity edge");
  }
}

int ContiguityGraph::count(Color c) const noexcept {
  return static_cast<int>(std::count(colors_.begin(), colors_.end(), c));
}

int ContiguityGraph::weight(AgentId i, AgentId j) const {
  if (i == j) return 0;
  return std::binary_search(edges_.begin(), edges_.end(), Edge{std::min(i, j), std::max(i, j)}) ? 1 : 0;
}

int ContiguityGraph::cross_color_edges() const noexcept {
  int cross = 0;
  for (auto [a, b] : edges_) cross += color(a) != color(b) ? 1 : 0;
  return cross;
}

ContiguityGraph contiguity_graph(const Configuration& config, const TorusGrid& grid) {
  std::vector<Edge> edges;
  for (AgentId a = 1; a <= config.agent_count(); ++a) {
    for (int id : grid.neighbor_ids(config.cell_of(a))) {
      const AgentId b = config.occupant(id);
      if (b > a) edges.emplace_back(a, b);
    }
  }
  std::vector<Color> colors;
  colors.reserve(static_cast<std::size_t>(config.agent_count()));
  for (AgentId a = 1; a <= config.agent_count(); ++a) colors.push_back(config.color(a));
  return ContiguityGraph(std::move(colors), edges);
}

namespace {

void require_two_colors(const ContiguityGraph& g, const char* what) {
  if (g.count(Color::Red) == 0 || g.count(Color::Blue) == 0) {
    throw DomainError(std::string(what) + " needs both colors present");
  }
}

struct AttributeMoments {
  double mean = 0.0;
  double sum_sq = 0.0;  // sum of (z_i - mean)^2
};

AttributeMoments red_indicator_moments(const ContiguityGraph& g) {
  const double n = g.agent_count();
  const double reds = g.count(Color::Red);
  const double mean = reds / n;
  // reds * (1 - mean)^2 + blues * mean^2
  const double sum_sq = reds * (1.0 - mean) * (1.0 - mean) + (n - reds) * mean * mean;
  return {mean, sum_sq};
}

void require_autocorrelation_defined(const ContiguityGraph& g, const char* what) {
  require_two_colors(g, what);
  if (g.edges().empty()) throw DomainError(std::string(what) + " is undefined without contiguity edges");
}

double red_indicator(Color c) { return c == Color::Red ? 1.0 : 0.0; }

}  // namespace

FreemanIndex freeman_index(const ContiguityGraph& g) {
  require_two_colors(g, "Freeman segregation index");
  FreemanIndex out;
  out.edges = static_cast<int>(g.edges().size());
  out.cross_edges = g.cross_color_edges();
  if (out.edges == 0) {
    out.degenerate = true;
    return out;
  }
  const double a = g.count(Color::Red);
  const double b = g.count(Color::Blue);
  const double p = 2.0 * a * b / ((a + b) * (a + b - 1.0));
  out.expected_cross_edges = out.edges * p;
  out.value = std::max(0.0, (out.expected_cross_edges - out.cross_edges) / out.expected_cross_edges);
  return out;
}

FreemanIndex freeman_index(const Configuration& config, const TorusGrid& grid) {
  return freeman_index(contiguity_graph(config, grid));
}

double morans_i(const ContiguityGraph& g) {
  require_autocorrelation_defined(g, "Moran's I");
  const auto m = red_indicator_moments(g);
  double cross = 0.0;
  for (auto [i, j] : g.edges()) {
    cross += (red_indicator(g.color(i)) - m.mean) * (red_indicator(g.color(j)) - m.mean);
  }
  // Ordered-pair sums count each undirected edge twice.
  const double weight_sum = 2.0 * static_cast<double>(g.edges().size());
  return (g.agent_count() / weight_sum) * (2.0 * cross / m.sum_sq);
}

double morans_i(const Configuration& config, const TorusGrid& grid) { return morans_i(contiguity_graph(config, grid)); }

double gearys_c(const ContiguityGraph& g) {
  require_autocorrelation_defined(g, "Geary's C");
  const auto m = red_indicator_moments(g);
  const double weight_sum = 2.0 * static_cast<double>(g.edges().size());
  // (z_i - z_j)^2 is 1 on cross-color edges and 0 otherwise.
  const double squared_diffs = 2.0 * g.cross_color_edges();
  return (g.agent_count() - 1.0) * squared_diffs / (2.0 * weight_sum * m.sum_sq);
}

double gearys_c(const Configuration& config, const TorusGrid& grid) { return gearys_c(contiguity_graph(config, grid)); }

Welfare welfare(const Configuration& config, const Model& model) {
  Welfare w;
  for (AgentId a = 1; a <= config.agent_count(); ++a) {
    const auto u =
        total_utility(a, model.grid.cell(config.cell_of(a)), config, model.grid, model.graph, model.params);
    w.total += u.total;
    w.color_part += u.color;
    w.friendship_part += u.friendship;
    w.moving_part += u.moving;
  }
  w.average = config.agent_count() > 0 ? w.total / config.agent_count() : 0.0;
  return w;
}

OutcomeRecord measure(const RunResult& result, const Model& model) {
  const Configuration& config = result.state.config();
  const auto contiguity = contiguity_graph(config, model.grid);
  const bool both_colors = contiguity.count(Color::Red) > 0 && contiguity.count(Color::Blue) > 0;
  const bool autocorrelation_defined = both_colors && !contiguity.edges().empty();
  constexpr double nan = std::numeric_limits<double>::quiet_NaN();

  OutcomeRecord r;
  r.iterations = result.state.iterations();
  r.movers = static_cast<int>(result.state.movers().size());
  r.fsi = both_colors ? freeman_index(contiguity).value : nan;
  r.moran = autocorrelation_defined ? morans_i(contiguity) : nan;
  r.geary = autocorrelation_defined ? gearys_c(contiguity) : nan;
  const Welfare w = welfare(config, model);
  r.avg_welfare = w.average;
  r.total_welfare = w.total;
  r.welfare_color_part = w.color_part;
  r.welfare_friend_part = w.friendship_part;
  r.stop_reason = result.reason;
  return r;
}

}  // namespace schelling
