#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "schelling/geometry.hpp"

namespace schelling {

/// Agents are numbered 1..A+B. Reds take ids 1..A, blues A+1..A+B.
using AgentId = int;
inline constexpr AgentId kNoAgent = 0;

enum class Color : std::uint8_t { Red, Blue };

[[nodiscard]] constexpr Color opposite(Color c) noexcept { return c == Color::Red ? Color::Blue : Color::Red; }

struct Agent {
  AgentId id = kNoAgent;
  Color color = Color::Red;
};

/// Occupancy of the torus: which agent sits where, and which cells are empty.
///
/// Cell-to-agent and agent-to-cell maps are kept mutually inverse; `move` is
/// the only mutation after construction.
class Configuration {
 public:
  /// Agents with the given colors (index i holds agent i + 1) placed at the
  /// given cell ids. Throws DomainError on duplicate or out-of-range cells, or
  /// when the population does not leave at least one empty cell.
  Configuration(const TorusGrid& grid, std::vector<Color> colors, std::span<const int> cells);

  [[nodiscard]] int side() const noexcept { return side_; }
  [[nodiscard]] int cell_count() const noexcept { return side_ * side_; }
  [[nodiscard]] int agent_count() const noexcept { return static_cast<int>(colors_.size()); }
  [[nodiscard]] int count(Color c) const noexcept;

  [[nodiscard]] Color color(AgentId a) const { return colors_[index(a)]; }
  [[nodiscard]] Agent agent(AgentId a) const { return Agent{a, color(a)}; }
  /// Cell id currently holding agent `a`.
  [[nodiscard]] int cell_of(AgentId a) const { return cell_of_[index(a)]; }
  /// Agent on cell `id`, or kNoAgent.
  [[nodiscard]] AgentId occupant(int cell) const { return occupant_[static_cast<std::size_t>(cell - 1)]; }
  [[nodiscard]] bool is_empty(int cell) const { return occupant(cell) == kNoAgent; }

  /// Empty cell ids in increasing order.
  [[nodiscard]] std::vector<int> empty_cells() const;
  [[nodiscard]] int empty_count() const noexcept { return cell_count() - agent_count(); }

  /// Raw occupancy indexed by cell id - 1 (0 for empty). Used for fingerprints.
  [[nodiscard]] std::span<const AgentId> occupancy() const noexcept { return occupant_; }

  /// Relocates `a` to the empty cell `destination`. Throws InvariantViolation if
  /// the destination is occupied.
  void move(AgentId a, int destination);

  /// Throws InvariantViolation if the two maps disagree or counts drift.
  void check_invariants() const;

  friend bool operator==(const Configuration& a, const Configuration& b) {
    return a.side_ == b.side_ && a.colors_ == b.colors_ && a.occupant_ == b.occupant_;
  }

 private:
  [[nodiscard]] std::size_t index(AgentId a) const { return static_cast<std::size_t>(a - 1); }

  int side_;
  std::vector<Color> colors_;
  std::vector<int> cell_of_;
  std::vector<AgentId> occupant_;
};

/// Color list for A reds followed by B blues.
[[nodiscard]] std::vector<Color> make_roster(int reds, int blues);

/// A reds and B blues on distinct cells drawn uniformly from `seed`.
/// Throws DomainError if A + B > n^2 - 1 or either count is negative.
[[nodiscard]] Configuration init_configuration(std::uint64_t seed, const TorusGrid& grid, int reds, int blues);

using Edge = std::pair<AgentId, AgentId>;
using Matching = std::vector<Edge>;

/// Partition of the complete graph on `num_agents` agents into num_agents - 1
/// perfect matchings: round-robin (circle method) schedule applied to a random
/// relabeling of the agents. Each edge is stored with first < second.
/// Throws DomainError when num_agents is odd or below 2.
[[nodiscard]] std::vector<Matching> build_one_factorization(std::uint64_t seed, int num_agents);

/// Undirected k-regular friendship graph.
class FriendshipGraph {
 public:
  FriendshipGraph(int num_agents, int degree, std::span<const Edge> edges);

  [[nodiscard]] int degree() const noexcept { return degree_; }
  [[nodiscard]] int agent_count() const noexcept { return static_cast<int>(friends_.size()); }
  [[nodiscard]] std::span<const AgentId> friends(AgentId a) const {
    return friends_[static_cast<std::size_t>(a - 1)];
  }
  [[nodiscard]] bool are_friends(AgentId a, AgentId b) const;
  /// All edges (first < second), sorted.
  [[nodiscard]] std::vector<Edge> edges() const;
  [[nodiscard]] std::size_t edge_count() const;

 private:
  int degree_;
  std::vector<std::vector<AgentId>> friends_;
};

/// Union of the first k factors of build_one_factorization(seed, num_agents).
/// For a fixed seed the graphs are nested in k. k = 0 is accepted for any
/// population size; k > 0 needs an even population.
[[nodiscard]] FriendshipGraph friendship_graph(std::uint64_t seed, int k, int num_agents);

/// Graph with no edges.
[[nodiscard]] FriendshipGraph empty_friendship_graph(int num_agents);

}  // namespace schelling
