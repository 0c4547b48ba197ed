#include <doctest.h>

#include <cmath>
#include <vector>

#include "oracles.hpp"
#include "schelling/errors.hpp"
#include "schelling/metrics.hpp"

using namespace schelling;

namespace {

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

oracle::Placement to_oracle(const Configuration& c, const TorusGrid& grid) {
  oracle::Placement p;
  p.n = grid.side();
  for (AgentId a = 1; a <= c.agent_count(); ++a) {
    const CellRef cell = grid.cell(c.cell_of(a));
    p.row.push_back(cell.row);
    p.col.push_back(cell.col);
    p.red.push_back(c.color(a) == Color::Red ? 1 : 0);
  }
  return p;
}

constexpr Color R = Color::Red;
constexpr Color B = Color::Blue;

}  // namespace

TEST_CASE("hand-derived values") {
  const TorusGrid grid(10);

  SUBCASE("adjacent mixed pair") {
    const auto c = place(grid, {{1, 1, R}, {1, 2, B}});
    CHECK(morans_i(c, grid) == -1.0);
    CHECK(gearys_c(c, grid) == 1.0);
    CHECK(freeman_index(c, grid).value == 0.0);
  }

  SUBCASE("two separated same-color pairs") {
    const auto c = place(grid, {{1, 1, R}, {1, 2, R}, {5, 5, B}, {5, 6, B}});
    CHECK(morans_i(c, grid) == 1.0);
    CHECK(gearys_c(c, grid) == 0.0);
    const auto f = freeman_index(c, grid);
    CHECK(f.value == 1.0);
    CHECK(f.edges == 2);
    CHECK(f.cross_edges == 0);
  }

  SUBCASE("a row R R B B") {
    // E = 3, one cross edge, expected 3 * 2/3 = 2, so FSI = 1/2.
    const auto c = place(grid, {{1, 1, R}, {1, 2, R}, {1, 3, B}, {1, 4, B}});
    const auto f = freeman_index(c, grid);
    CHECK(f.edges == 3);
    CHECK(f.expected_cross_edges == doctest::Approx(2.0));
    CHECK(f.value == doctest::Approx(0.5));
  }

  SUBCASE("more mixing than expected clamps to zero") {
    const auto c = place(grid, {{1, 1, R}, {1, 2, B}, {1, 3, R}, {1, 4, B}});
    CHECK(freeman_index(c, grid).value == 0.0);
  }
}

TEST_CASE("degenerate inputs") {
  const TorusGrid grid(10);
  const auto far = place(grid, {{1, 1, R}, {5, 5, B}});
  const auto fi = freeman_index(far, grid);
  CHECK(fi.degenerate);
  CHECK(fi.value == 0.0);
  CHECK_THROWS_AS((void)morans_i(far, grid), DomainError);
  CHECK_THROWS_AS((void)gearys_c(far, grid), DomainError);

  const auto mono = place(grid, {{1, 1, R}, {1, 2, R}});
  CHECK_THROWS_AS((void)freeman_index(mono, grid), DomainError);
  CHECK_THROWS_AS((void)morans_i(mono, grid), DomainError);
}

TEST_CASE("contiguity graph edges match Moore adjacency") {
  const TorusGrid grid(10);
  const auto c = init_configuration(17, grid, 37, 37);
  const auto g = contiguity_graph(c, grid);
  const auto w = oracle::weight_matrix(to_oracle(c, grid));
  std::size_t count = 0;
  for (AgentId i = 1; i <= 74; ++i) {
    for (AgentId j = 1; j <= 74; ++j) {
      REQUIRE(g.weight(i, j) == w[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)]);
      count += static_cast<std::size_t>(w[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)]);
    }
  }
  CHECK(g.edges().size() * 2 == count);
}

TEST_CASE("metrics agree with naive loops on a 4x4 torus") {
  const TorusGrid grid(4);
  int checked = 0;
  for (std::uint64_t s = 0; s < 500; ++s) {
    Rng rng(s);
    const int agents = 2 + static_cast<int>(rng.uniform_index(5));
    const int reds = 1 + static_cast<int>(rng.uniform_index(static_cast<std::size_t>(agents - 1)));
    const auto c = init_configuration(s, grid, reds, agents - reds);
    const auto p = to_oracle(c, grid);
    const auto w = oracle::weight_matrix(p);
    const auto f = freeman_index(c, grid);
    CHECK(std::abs(f.value - oracle::freeman(w, p.red)) <= 1e-12);
    if (f.degenerate) continue;
    CHECK(std::abs(morans_i(c, grid) - oracle::moran(w, p.red)) <= 1e-12);
    CHECK(std::abs(gearys_c(c, grid) - oracle::geary(w, p.red)) <= 1e-12);
    ++checked;
  }
  CHECK(checked > 300);
}

TEST_CASE("metrics are invariant under translation and color swap") {
  const TorusGrid grid(10);
  for (std::uint64_t s = 0; s < 20; ++s) {
    const auto c = init_configuration(s, grid, 37, 37);
    std::vector<Color> colors;
    std::vector<Color> swapped;
    std::vector<int> shifted;
    for (AgentId a = 1; a <= c.agent_count(); ++a) {
      colors.push_back(c.color(a));
      swapped.push_back(opposite(c.color(a)));
      shifted.push_back(grid.shifted(grid.cell(c.cell_of(a)), 3, -4).id);
    }
    std::vector<int> cells;
    for (AgentId a = 1; a <= c.agent_count(); ++a) cells.push_back(c.cell_of(a));
    const Configuration moved(grid, colors, shifted);
    const Configuration flipped(grid, swapped, cells);

    for (const auto* other : {&moved, &flipped}) {
      CHECK(freeman_index(*other, grid).value == doctest::Approx(freeman_index(c, grid).value).epsilon(1e-12));
      CHECK(morans_i(*other, grid) == doctest::Approx(morans_i(c, grid)).epsilon(1e-12));
      CHECK(gearys_c(*other, grid) == doctest::Approx(gearys_c(c, grid)).epsilon(1e-12));
    }
  }
}

TEST_CASE("welfare") {
  const TorusGrid grid(10);
  const auto c = init_configuration(2, grid, 37, 37);

  SUBCASE("everyone satisfied at x = 0") {
    const auto g = empty_friendship_graph(74);
    const UtilityParams p{.x = 0.0};
    const auto w = welfare(c, Model{grid, g, p});
    CHECK(w.total == doctest::Approx(74.0));
    CHECK(w.average == doctest::Approx(1.0));
    CHECK(w.color_part == doctest::Approx(74.0));
    CHECK(w.friendship_part == 0.0);
  }

  SUBCASE("parts add up and staying costs nothing") {
    const auto g = friendship_graph(2, 3, 74);
    UtilityParams p;
    p.x = 0.5;
    p.alpha = 0.5;
    p.beta = 0.7;
    const auto w = welfare(c, Model{grid, g, p});
    CHECK(w.moving_part == doctest::Approx(74 * 0.3));
    CHECK(w.total == doctest::Approx(w.color_part + w.friendship_part + w.moving_part).epsilon(1e-12));
    CHECK(w.average == doctest::Approx(w.total / 74));
    double sum = 0;
    for (AgentId a = 1; a <= 74; ++a) sum += total_utility(a, grid.cell(c.cell_of(a)), c, grid, g, p).total;
    CHECK(w.total == doctest::Approx(sum).epsilon(1e-12));
  }
}

TEST_CASE("measure reports NaN for undefined autocorrelation") {
  const TorusGrid grid(10);
  const auto g = empty_friendship_graph(2);
  const UtilityParams p{.x = 0.0};
  const Model m{grid, g, p};
  const auto r = run(place(grid, {{1, 1, R}, {5, 5, B}}), m, 10, 1);
  const auto rec = measure(r, m);
  CHECK(std::isnan(rec.moran));
  CHECK(std::isnan(rec.geary));
  CHECK(rec.fsi == 0.0);
  CHECK(rec.iterations == 0);
  CHECK(rec.stop_reason == StopReason::Converged);
}
