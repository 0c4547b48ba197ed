#include "schelling/population.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "schelling/errors.hpp"
#include "schelling/rng.hpp"

namespace schelling {

Configuration::Configuration(const TorusGrid& grid, std::vector<Color> colors, std::span<const int> cells)
    : side_(grid.side()), colors_(std::move(colors)) {
  if (cells.size() != colors_.size()) {
    throw DomainError("placement lists " + std::to_string(cells.size()) + " cells for " +
                      std::to_string(colors_.size()) + " agents");
  }
  if (agent_count() >= grid.cell_count()) {
    throw DomainError("population of " + std::to_string(agent_count()) + " needs at least one empty cell on a " +
                      std::to_string(grid.side()) + "x" + std::to_string(grid.side()) + " torus");
  }
  occupant_.assign(static_cast<std::size_t>(grid.cell_count()), kNoAgent);
  cell_of_.assign(cells.begin(), cells.end());
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const int c = cells[i];
    if (c < 1 || c > grid.cell_count()) throw DomainError("cell id " + std::to_string(c) + " out of range");
    auto& slot = occupant_[static_cast<std::size_t>(c - 1)];
    if (slot != kNoAgent) throw DomainError("cell id " + std::to_string(c) + " assigned twice");
    slot = static_cast<AgentId>(i + 1);
  }
}

int Configuration::count(Color c) const noexcept {
  return static_cast<int>(std::count(colors_.begin(), colors_.end(), c));
}

std::vector<int> Configuration::empty_cells() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(empty_count()));
  for (std::size_t i = 0; i < occupant_.size(); ++i) {
    if (occupant_[i] == kNoAgent) out.push_back(static_cast<int>(i + 1));
  }
  return out;
}

void Configuration::move(AgentId a, int destination) {
  auto& dest = occupant_[static_cast<std::size_t>(destination - 1)];
  if (dest != kNoAgent) {
    throw InvariantViolation("agent " + std::to_string(a) + " moved onto occupied cell " +
                             std::to_string(destination));
  }
  auto& origin = cell_of_[index(a)];
  occupant_[static_cast<std::size_t>(origin - 1)] = kNoAgent;
  dest = a;
  origin = destination;
}

void Configuration::check_invariants() const {
  int occupied = 0;
  for (std::size_t i = 0; i < occupant_.size(); ++i) {
    const AgentId a = occupant_[i];
    if (a == kNoAgent) continue;
    ++occupied;
    if (a < 1 || a > agent_count() || cell_of_[index(a)] != static_cast<int>(i + 1)) {
      throw InvariantViolation("occupancy maps disagree at cell " + std::to_string(i + 1));
    }
  }
  if (occupied != agent_count()) throw InvariantViolation("agent count drifted");
}

std::vector<Color> make_roster(int reds, int blues) {
  std::vector<Color> colors(static_cast<std::size_t>(reds), Color::Red);
  colors.insert(colors.end(), static_cast<std::size_t>(blues), Color::Blue);
  return colors;
}

Configuration init_configuration(std::uint64_t seed, const TorusGrid& grid, int reds, int blues) {
  if (reds < 0 || blues < 0) throw DomainError("population counts must be non-negative");
  if (reds + blues > grid.cell_count() - 1) {
    throw DomainError(std::to_string(reds + blues) + " agents do not fit on " + std::to_string(grid.cell_count()) +
                      " cells with at least one left empty");
  }
  std::vector<int> cells(static_cast<std::size_t>(grid.cell_count()));
  std::iota(cells.begin(), cells.end(), 1);
  Rng rng(seed);
  rng.shuffle(std::span<int>(cells));
  cells.resize(static_cast<std::size_t>(reds + blues));
  return Configuration(grid, make_roster(reds, blues), cells);
}

std::vector<Matching> build_one_factorization(std::uint64_t seed, int num_agents) {
  if (num_agents < 2 || num_agents % 2 != 0) {
    throw DomainError("a perfect matching needs an even number of agents (>= 2), got " + std::to_string(num_agents));
  }
  std::vector<AgentId> label(static_cast<std::size_t>(num_agents));
  std::iota(label.begin(), label.end(), 1);
  Rng rng(seed);
  rng.shuffle(std::span<AgentId>(label));

  // Circle method: vertex m = num_agents - 1 is fixed, vertices 0..m-1 rotate.
  const int m = num_agents - 1;
  auto make_edge = [&](int u, int v) {
    AgentId a = label[static_cast<std::size_t>(u)];
    AgentId b = label[static_cast<std::size_t>(v)];
    return a < b ? Edge{a, b} : Edge{b, a};
  };
  std::vector<Matching> factors;
  factors.reserve(static_cast<std::size_t>(m));
  for (int round = 0; round < m; ++round) {
    Matching matching;
    matching.reserve(static_cast<std::size_t>(num_agents / 2));
    matching.push_back(make_edge(round, m));
    for (int i = 1; i < num_agents / 2; ++i) {
      matching.push_back(make_edge((round + i) % m, (round - i + m) % m));
    }
    factors.push_back(std::move(matching));
  }
  return factors;
}

FriendshipGraph::FriendshipGraph(int num_agents, int degree, std::span<const Edge> edges)
    : degree_(degree), friends_(static_cast<std::size_t>(num_agents)) {
  for (const auto& [a, b] : edges) {
    if (a == b || a < 1 || b < 1 || a > num_agents || b > num_agents) {
      throw DomainError("invalid friendship edge (" + std::to_string(a) + ", " + std::to_string(b) + ")");
    }
    friends_[static_cast<std::size_t>(a - 1)].push_back(b);
    friends_[static_cast<std::size_t>(b - 1)].push_back(a);
  }
  for (std::size_t i = 0; i < friends_.size(); ++i) {
    auto& list = friends_[i];
    std::sort(list.begin(), list.end());
    if (std::adjacent_find(list.begin(), list.end()) != list.end()) {
      throw DomainError("duplicate friendship edge at agent " + std::to_string(i + 1));
    }
    if (static_cast<int>(list.size()) != degree) {
      throw DomainError("agent " + std::to_string(i + 1) + " has " + std::to_string(list.size()) +
                        " friends, expected " + std::to_string(degree));
    }
  }
}

bool FriendshipGraph::are_friends(AgentId a, AgentId b) const {
  const auto list = friends(a);
  return std::binary_search(list.begin(), list.end(), b);
}

std::vector<Edge> FriendshipGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (std::size_t i = 0; i < friends_.size(); ++i) {
    const AgentId a = static_cast<AgentId>(i + 1);
    for (AgentId b : friends_[i]) {
      if (a < b) out.emplace_back(a, b);
    }
  }
  return out;
}

std::size_t FriendshipGraph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& list : friends_) twice += list.size();
  return twice / 2;
}

FriendshipGraph friendship_graph(std::uint64_t seed, int k, int num_agents) {
  if (num_agents < 0) throw DomainError("negative population");
  if (k == 0) return empty_friendship_graph(num_agents);
  if (k < 0 || k > num_agents - 1) {
    throw DomainError("degree " + std::to_string(k) + " outside [0, " + std::to_string(num_agents - 1) + "]");
  }
  const auto factors = build_one_factorization(seed, num_agents);
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(k) * static_cast<std::size_t>(num_agents / 2));
  for (int f = 0; f < k; ++f) {
    const auto& m = factors[static_cast<std::size_t>(f)];
    edges.insert(edges.end(), m.begin(), m.end());
  }
  return FriendshipGraph(num_agents, k, edges);
}

FriendshipGraph empty_friendship_graph(int num_agents) { return FriendshipGraph(num_agents, 0, {}); }

}  // namespace schelling
