#include <doctest.h>

#include <cmath>
#include <vector>

#include "schelling/errors.hpp"
#include "schelling/utility.hpp"

using namespace schelling;

namespace {

/// Builds a configuration from (row, col, color) triples on an n x n torus.
struct Placed {
  int row;
  int col;
  Color color;
};

Configuration place(const TorusGrid& grid, const std::vector<Placed>& agents) {
  std::vector<Color> colors;
  std::vector<int> cells;
  for (const auto& p : agents) {
    colors.push_back(p.color);
    cells.push_back(grid.cell(p.row, p.col).id);
  }
  return Configuration(grid, colors, cells);
}

constexpr Color R = Color::Red;
constexpr Color B = Color::Blue;

}  // namespace

TEST_CASE("color fractions count empties in the denominator") {
  const TorusGrid grid(10);

  SUBCASE("six reds and two empties around a red") {
    // Agent 1 at (5,5); reds fill six of its eight neighbors.
    const auto c = place(grid, {{5, 5, R}, {4, 4, R}, {4, 5, R}, {4, 6, R}, {5, 4, R}, {5, 6, R}, {6, 4, R}});
    const auto xi = color_fractions(c, grid, grid.cell(5, 5));
    CHECK(xi.xi_red == 0.75);
    CHECK(xi.xi_blue == 0.0);
    CHECK(color_utility(1, grid.cell(5, 5), c, grid, UtilityParams{.x = 0.5}) == 1.0);
  }

  SUBCASE("four blues, one red, three empties") {
    const auto c = place(grid, {{5, 5, R}, {4, 4, B}, {4, 5, B}, {4, 6, B}, {5, 4, B}, {6, 6, R}});
    const auto xi = color_fractions(c, grid, grid.cell(5, 5));
    CHECK(xi.xi_red == 0.125);
    CHECK(xi.xi_blue == 0.5);
  }

  SUBCASE("the evaluating agent never counts itself") {
    // Agent 1 at (5,5) looking at the empty cell (5,6) next door.
    const auto c = place(grid, {{5, 5, R}, {4, 6, R}});
    CHECK(color_fractions(c, grid, grid.cell(5, 6), 1).xi_red == 0.125);
    CHECK(color_fractions(c, grid, grid.cell(5, 6)).xi_red == 0.25);
  }
}

TEST_CASE("color satisfaction variants") {
  CHECK(color_satisfaction(0.5, 0.5, ColorVariant::ThresholdSaturating) == 1.0);
  CHECK(color_satisfaction(0.375, 0.5, ColorVariant::ThresholdSaturating) == 0.375);
  CHECK(color_satisfaction(0.5, 0.5, ColorVariant::LiteralStrict) == 0.0);
  CHECK(color_satisfaction(0.625, 0.5, ColorVariant::LiteralStrict) == 0.625);
  CHECK(color_satisfaction(0.5, 0.5, ColorVariant::LiteralNonStrict) == 0.5);
  CHECK(color_satisfaction(0.375, 0.5, ColorVariant::LiteralNonStrict) == 0.0);
  CHECK(color_satisfaction(0.0, 0.0, ColorVariant::ThresholdSaturating) == 1.0);
}

TEST_CASE("saturating color utility is monotone in the share and bounded") {
  for (int t = 0; t <= 20; ++t) {
    const double x = t / 20.0;
    double prev = -1.0;
    for (int k = 0; k <= 8; ++k) {
      const double u = color_satisfaction(k / 8.0, x, ColorVariant::ThresholdSaturating);
      CHECK(u >= prev);
      CHECK(u >= 0.0);
      CHECK(u <= 1.0);
      prev = u;
    }
  }
}

TEST_CASE("variant names parse") {
  CHECK(parse_color_variant("threshold_saturating") == ColorVariant::ThresholdSaturating);
  CHECK(parse_color_variant("LiteralStrict") == ColorVariant::LiteralStrict);
  CHECK(parse_color_variant("literal_non_strict") == ColorVariant::LiteralNonStrict);
  CHECK_THROWS_AS((void)parse_color_variant("fuzzy"), ConfigError);
}

TEST_CASE("friend utility") {
  const TorusGrid grid(10);
  const auto c = place(grid, {{1, 1, R}, {1, 3, B}, {1, 5, R}});
  const std::vector<Edge> triangle{{1, 2}, {1, 3}, {2, 3}};
  const FriendshipGraph g(3, 2, triangle);

  SUBCASE("mean distance to friends") {
    // Friends at distance 0.2 and 0.4.
    CHECK(friend_utility(1, grid.cell(1, 1), c, grid, g) == doctest::Approx(0.7).epsilon(1e-15));
  }

  SUBCASE("adjacent to a single friend") {
    const std::vector<Edge> pair{{1, 2}};
    const auto c2 = place(grid, {{1, 1, R}, {1, 2, B}});
    const FriendshipGraph g2(2, 1, pair);
    CHECK(friend_utility(1, grid.cell(1, 1), c2, grid, g2) == doctest::Approx(1.0 - 1.0 / 10));
  }

  SUBCASE("no friends") {
    const auto empty = empty_friendship_graph(3);
    CHECK(friend_utility(1, grid.cell(7, 7), c, grid, empty) == 1.0);
  }
}

TEST_CASE("moving utility") {
  const TorusGrid grid(10);
  const auto c = place(grid, {{1, 1, R}, {5, 5, B}});
  UtilityParams p;
  p.c_bar = 0.5;

  p.cost_mode = CostMode::Fixed;
  CHECK(moving_utility(1, grid.cell(1, 1), c, grid, p) == 1.0);
  CHECK(moving_utility(1, grid.cell(1, 3), c, grid, p) == 0.5);

  p.cost_mode = CostMode::Variable;
  CHECK(moving_utility(1, grid.cell(1, 1), c, grid, p) == 1.0);
  CHECK(moving_utility(1, grid.cell(1, 3), c, grid, p) == doctest::Approx(0.9).epsilon(1e-15));
}

TEST_CASE("weights and breakdown") {
  UtilityParams p;
  p.alpha = 0.25;
  p.beta = 0.6;
  const auto w = p.weights();
  CHECK(w.color == doctest::Approx(0.15));
  CHECK(w.friendship == doctest::Approx(0.45));
  CHECK(w.moving == doctest::Approx(0.4));
  CHECK(w.color + w.friendship + w.moving == doctest::Approx(1.0).epsilon(1e-15));

  const TorusGrid grid(10);
  const auto c = place(grid, {{1, 1, R}, {1, 2, B}, {2, 2, R}, {8, 8, B}});
  const std::vector<Edge> edges{{1, 4}, {2, 3}};
  const FriendshipGraph g(4, 1, edges);
  for (int cell = 1; cell <= grid.cell_count(); ++cell) {
    if (!c.is_empty(cell) && c.occupant(cell) != 1) continue;
    const auto u = total_utility(1, grid.cell(cell), c, grid, g, p);
    CHECK(u.total == doctest::Approx(u.color + u.friendship + u.moving).epsilon(1e-12));
    const double expect = w.color * color_utility(1, grid.cell(cell), c, grid, p) +
                          w.friendship * friend_utility(1, grid.cell(cell), c, grid, g) +
                          w.moving * moving_utility(1, grid.cell(cell), c, grid, p);
    CHECK(std::abs(u.total - expect) <= 1e-12);
  }
}

TEST_CASE("parameter validation") {
  UtilityParams p;
  CHECK_NOTHROW(p.validate());
  p.x = 1.5;
  CHECK_THROWS_AS(p.validate(), DomainError);
  p = {};
  p.c_bar = 1.0;
  CHECK_THROWS_AS(p.validate(), DomainError);
  p = {};
  p.beta = -0.1;
  CHECK_THROWS_AS(p.validate(), DomainError);
}
