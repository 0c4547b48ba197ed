#include <doctest.h>

#include <cmath>
#include <set>
#include <vector>

#include "schelling/errors.hpp"
#include "schelling/harness.hpp"

using namespace schelling;

namespace {

RunRow row(int h, double iterations, double fsi) {
  RunRow r;
  r.replicate = h;
  r.record.iterations = static_cast<int>(iterations);
  r.record.fsi = fsi;
  return r;
}

ExperimentSpec small_spec() {
  ExperimentSpec s;
  s.name = "small";
  s.replicates = 4;
  s.values = {0.25, 0.75};
  s.params.alpha = 0.5;
  s.k = 3;
  return s;
}

}  // namespace

TEST_CASE("aggregate uses the sample standard deviation") {
  const std::vector<RunRow> rows{row(2, 1, 0.5), row(1, 0, 0.25)};
  const auto s = aggregate(rows);
  CHECK(s.count == 2);
  CHECK(s.mean_of("iterations") == 0.5);
  CHECK(s.sd_of("iterations") == doctest::Approx(std::sqrt(0.5)));
  CHECK(s.mean_of("fsi") == 0.375);
  CHECK(s.sd_of("movers") == 0.0);
  CHECK_THROWS_AS((void)s.mean_of("bogus"), DomainError);
}

TEST_CASE("aggregate of one record has zero spread") {
  const std::vector<RunRow> rows{row(1, 7, 0.9)};
  const auto s = aggregate(rows);
  CHECK(s.mean_of("iterations") == 7);
  for (double sd : s.sd) CHECK(sd == 0.0);
  CHECK_THROWS_AS((void)aggregate(std::span<const RunRow>{}), DomainError);
}

TEST_CASE("aggregate does not depend on row order") {
  std::vector<RunRow> rows;
  for (int h = 1; h <= 9; ++h) rows.push_back(row(h, h * 3 % 7, 0.1 * h));
  auto reversed = rows;
  std::reverse(reversed.begin(), reversed.end());
  const auto a = aggregate(rows);
  const auto b = aggregate(reversed);
  CHECK(a.mean == b.mean);
  CHECK(a.sd == b.sd);
}

TEST_CASE("presets") {
  const auto names = preset_names();
  for (const char* want : {"baseline", "cost-fixed-fair", "cost-var-fair", "cost-fixed-low", "cost-var-low",
                           "cost-fixed-high", "cost-var-high", "net-nocost", "net-cost-fixed", "net-cost-var",
                           "degree-sweep"}) {
    CHECK(std::find(names.begin(), names.end(), want) != names.end());
  }
  for (const auto& n : names) CHECK_NOTHROW(preset(n).validate());

  const auto base = preset("baseline");
  CHECK(base.axis == SweepAxis::X);
  CHECK(base.values.size() == 21);
  CHECK(base.replicates == 100);
  CHECK(base.effective_max_iter() == 1000);

  const auto fair = preset("cost-fixed-fair");
  CHECK(fair.axis == SweepAxis::Beta);
  CHECK(fair.params.x == 1.0);
  CHECK(fair.params.c_bar == 0.5);
  CHECK(fair.params.cost_mode == CostMode::Fixed);

  const auto net = preset("net-nocost");
  CHECK(net.k == 3);
  CHECK(net.params.alpha == 0.5);
  CHECK(net.params.beta == 1.0);

  const auto deg = preset("degree-sweep");
  CHECK(deg.axis == SweepAxis::K);
  CHECK(deg.values.size() == 74);
  CHECK(deg.degree_at(73) == 73);

  CHECK_THROWS_AS((void)preset("nope"), ConfigError);
}

TEST_CASE("spec validation") {
  auto s = small_spec();
  CHECK_NOTHROW(s.validate());
  s.values = {};
  CHECK_THROWS_AS(s.validate(), ConfigError);
  s = small_spec();
  s.reds = 60;
  s.blues = 40;
  CHECK_THROWS_AS(s.validate(), ConfigError);
  s = small_spec();
  s.axis = SweepAxis::K;
  s.values = {2.5};
  CHECK_THROWS_AS(s.validate(), ConfigError);
  s = small_spec();
  s.blues = 36;
  CHECK_THROWS_AS(s.validate(), ConfigError);  // odd population with k = 3
  s.k = 0;
  CHECK_NOTHROW(s.validate());
}

TEST_CASE("replicate seeds") {
  auto s = small_spec();
  std::set<std::uint64_t> placements;
  for (int h = 1; h <= 50; ++h) {
    const auto a = replicate_seeds(s, h, 0);
    const auto b = replicate_seeds(s, h, 1);
    CHECK(a.placement == b.placement);
    CHECK(a.friendship == b.friendship);
    CHECK(a.run == b.run);
    placements.insert(a.placement);
  }
  CHECK(placements.size() == 50);

  s.repermute_network = true;
  CHECK(replicate_seeds(s, 1, 0).friendship != replicate_seeds(s, 1, 1).friendship);
  CHECK(replicate_seeds(s, 1, 0).placement == replicate_seeds(s, 1, 1).placement);
}

TEST_CASE("experiments are deterministic and thread-count independent") {
  const auto s = small_spec();
  const auto serial = run_experiment(s, 1);
  const auto again = run_experiment(s, 1);
  const auto parallel = run_experiment(s, 3);
  REQUIRE(serial.points.size() == 2);
  for (std::size_t p = 0; p < 2; ++p) {
    CHECK(serial.points[p].value == s.values[p]);
    CHECK(serial.points[p].rows.size() == 4);
    for (std::size_t h = 0; h < 4; ++h) {
      const auto a = outcome_values(serial.points[p].rows[h].record);
      const auto b = outcome_values(again.points[p].rows[h].record);
      const auto c = outcome_values(parallel.points[p].rows[h].record);
      for (std::size_t f = 0; f < kOutcomeFieldCount; ++f) {
        CHECK(((a[f] == b[f] && a[f] == c[f]) || (std::isnan(a[f]) && std::isnan(b[f]) && std::isnan(c[f]))));
      }
    }
    CHECK(serial.points[p].summary.mean == parallel.points[p].summary.mean);
  }
}

TEST_CASE("run_replicate matches the sweep entry") {
  const auto s = small_spec();
  const auto result = run_experiment(s, 1);
  const auto rec = run_replicate(s, 1, 3);
  CHECK(outcome_values(rec) == outcome_values(result.points[1].rows[2].record));
}

TEST_CASE("unit grid") {
  const auto g = unit_grid();
  REQUIRE(g.size() == 21);
  CHECK(g.front() == 0.0);
  CHECK(g.back() == 1.0);
  CHECK(g[15] == 0.75);
}
