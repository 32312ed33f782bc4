#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>

#include "a2r/errors.hpp"
#include "a2r/montecarlo.hpp"
#include "a2r/rng.hpp"

using namespace a2r;
using a2r::mc::json;

namespace {

json small_config_json() {
  return json{
      {"family",
       {{"regime", "upper"},
        {"n_grid", {60}},
        {"degree", 3},
        {"count", {{"kind", "const"}, {"value", 4}}}}},
      {"replicates", 24},
      {"master_seed", 99},
      {"workers", 2},
      {"statistics",
       {"deficiency", "second_rescaled", "cyclic_vertices", "top_sizes", "s_window",
        "non2_outside_giant"}},
      {"s_windows", {{{"a", 0.2}, {"t", 2.0}}}},
      {"moment_orders", {1, 2}},
      {"top_k", 4}};
}

}  // namespace

TEST_CASE("count rules") {
  mc::CountRule c;
  c.kind = mc::CountRule::Kind::Const;
  c.value = 50;
  CHECK(c.eval(1000) == 50);

  mc::CountRule m;
  m.kind = mc::CountRule::Kind::NMinus;
  m.value = 50;
  CHECK(m.eval(1000) == 950);
  CHECK_THROWS_AS(m.eval(10), error);

  mc::CountRule p;
  p.kind = mc::CountRule::Kind::Pow;
  p.coef = 2.0;
  p.exponent = 0.5;
  CHECK(p.eval(10000) == 200);

  const auto parsed = mc::CountRule::parse(json{{"kind", "pow"}, {"coef", 2.0}, {"exponent", 0.5}});
  CHECK(parsed.eval(10000) == 200);
  CHECK_THROWS_AS(mc::CountRule::parse(json{{"kind", "nope"}}), error);
}

TEST_CASE("families instantiate the right sequences") {
  mc::Family upper;
  upper.regime = mc::Family::Regime::Upper;
  upper.n_grid = {200};
  upper.degree = 3;
  upper.count.kind = mc::CountRule::Kind::Const;
  upper.count.value = 10;
  const auto su = upper.instantiate(200);
  CHECK(su.n() == 200);
  CHECK(su.count(2) == 190);
  CHECK(su.count(3) == 10);

  mc::Family lower;
  lower.regime = mc::Family::Regime::Lower;
  lower.n_grid = {200};
  lower.count.kind = mc::CountRule::Kind::Const;
  lower.count.value = 10;
  const auto sl = lower.instantiate(200);
  CHECK(sl.count(1) == 10);
  CHECK(sl.count(2) == 190);

  mc::Family pure;
  pure.regime = mc::Family::Regime::Pure;
  pure.n_grid = {7};
  CHECK(pure.instantiate(7).ell_ne2() == 0);
}

TEST_CASE("config json round-trip preserves the canonical dump") {
  const auto config = mc::ExperimentConfig::from_json(small_config_json());
  const auto dumped = config.to_json();
  const auto reparsed = mc::ExperimentConfig::from_json(dumped);
  CHECK(reparsed.to_json().dump() == dumped.dump());
  CHECK(config.hash() == reparsed.hash());
  CHECK(config.hash().size() == 16);
}

TEST_CASE("window parameters are validated at parse time") {
  auto j = small_config_json();
  j["s_windows"] = {{{"a", 0.0}, {"t", 1.0}}};
  CHECK_THROWS_AS(mc::ExperimentConfig::from_json(j), error);
  j["s_windows"] = {{{"a", 2.0}, {"t", 1.0}}};
  CHECK_THROWS_AS(mc::ExperimentConfig::from_json(j), error);
}

TEST_CASE("master_seed is required") {
  auto j = small_config_json();
  j.erase("master_seed");
  CHECK_THROWS_AS(mc::ExperimentConfig::from_json(j), error);
}

TEST_CASE("single-replicate run reduces to that replicate") {
  json j = small_config_json();
  j["replicates"] = 1;
  j["statistics"] = {"deficiency"};
  const auto config = mc::ExperimentConfig::from_json(j);
  const auto result = mc::run(config);
  REQUIRE(result.grid.size() == 1);
  REQUIRE(result.grid[0].records.size() == 1);
  const double v = result.grid[0].records[0].deficiency;
  CHECK(result.grid[0].aggregates["deficiency"]["mean"] == v);
  CHECK(result.grid[0].aggregates["deficiency"]["se"] == 0.0);
  CHECK(result.grid[0].records[0].seed == rng::mix(99, 0, 0));
}

TEST_CASE("runs are byte-identical across repeats and worker counts") {
  const auto config = mc::ExperimentConfig::from_json(small_config_json());
  const auto r1 = mc::run(config);
  const auto r2 = mc::run(config);
  CHECK(r1.to_json().dump() == r2.to_json().dump());

  auto j = small_config_json();
  j["workers"] = 1;
  const auto serial = mc::run(mc::ExperimentConfig::from_json(j));
  // worker count is part of the config dump; compare grids only
  CHECK(json(serial.to_json()["grid"]).dump() == json(r1.to_json()["grid"]).dump());

  std::ostringstream c1, c2;
  r1.write_records_csv(c1);
  serial.write_records_csv(c2);
  CHECK(c1.str() == c2.str());
}

TEST_CASE("merging disjoint replicate ranges equals one run") {
  const auto config = mc::ExperimentConfig::from_json(small_config_json());
  const auto full = mc::run_range(config, 0, 0, config.replicates);
  auto head = mc::run_range(config, 0, 0, 10);
  const auto tail = mc::run_range(config, 0, 10, config.replicates);
  head.insert(head.end(), tail.begin(), tail.end());
  REQUIRE(head.size() == full.size());
  for (std::size_t i = 0; i < full.size(); ++i) {
    CHECK(head[i].seed == full[i].seed);
    CHECK(head[i].deficiency == full[i].deficiency);
    CHECK(head[i].s_counts == full[i].s_counts);
    CHECK(head[i].top_sizes == full[i].top_sizes);
  }
  const auto seq = config.family.instantiate(config.family.n_grid[0]);
  CHECK(mc::aggregate(config, seq, head).dump() == mc::aggregate(config, seq, full).dump());
}

TEST_CASE("aggregates contain the documented blocks") {
  const auto config = mc::ExperimentConfig::from_json(small_config_json());
  const auto result = mc::run(config);
  const json& agg = result.grid[0].aggregates;
  CHECK(agg.contains("deficiency"));
  CHECK(agg.contains("second_rescaled"));
  CHECK(agg["second_rescaled"].contains("ks_vs_cdf_y2"));
  CHECK(agg["second_rescaled"]["sorted_sample"].size() == 24);
  CHECK(agg.contains("s_windows"));
  CHECK(agg["s_windows"][0]["factorial_moments"].size() == 2);
  CHECK(agg["s_windows"][0].contains("p_zero"));
  CHECK(agg.contains("non2_outside_giant"));
  CHECK(agg.contains("top_sizes"));

  const json doc = result.to_json();
  CHECK(doc["meta"]["version"].is_string());
  CHECK(doc["meta"]["generator"].is_string());
  CHECK(doc["meta"]["config_hash"].is_string());
  CHECK(doc["grid"][0]["n"] == 60);
  CHECK(doc["grid"][0]["ell_ne2"] == 12);
}

TEST_CASE("csv has one row per replicate and the requested columns") {
  const auto config = mc::ExperimentConfig::from_json(small_config_json());
  const auto result = mc::run(config);
  std::ostringstream out;
  result.write_records_csv(out);
  std::istringstream in(out.str());
  std::string header;
  std::getline(in, header);
  CHECK(header ==
        "grid_index,n,replicate,seed,deficiency,second_rescaled,cyclic_vertices,"
        "non2_outside_giant,s_window_0,top_size_0,top_size_1,top_size_2,top_size_3");
  std::size_t rows = 0;
  std::string line;
  while (std::getline(in, line))
    if (!line.empty()) ++rows;
  CHECK(rows == 24);

  std::ostringstream overlay;
  result.write_cdf_overlay_csv(overlay, 0);
  std::istringstream oin(overlay.str());
  std::getline(oin, header);
  CHECK(header == "a,empirical,theoretical");
}

TEST_CASE("construction errors carry the grid point") {
  json j = small_config_json();
  j["family"]["regime"] = "lower";
  j["family"]["count"] = {{"kind", "const"}, {"value", 3}};  // odd n1: ell odd
  const auto config = mc::ExperimentConfig::from_json(j);
  CHECK_THROWS_AS(mc::run(config), error);
}

TEST_CASE("line quantiles reduce the line-length distribution") {
  json j{{"family",
          {{"regime", "lower"},
           {"n_grid", {40}},
           {"count", {{"kind", "const"}, {"value", 6}}}}},
         {"replicates", 12},
         {"master_seed", 3},
         {"workers", 1},
         {"statistics", {"line_quantiles", "top_sizes"}},
         {"line_quantiles", {0.5, 1.0}},
         {"top_k", 2}};
  const auto config = mc::ExperimentConfig::from_json(j);
  const auto result = mc::run(config);
  const auto& records = result.grid[0].records;
  for (const auto& rec : records) {
    REQUIRE(rec.line_lengths.size() == 2);
    // p=1 is the longest line; the median is never longer
    CHECK(rec.line_lengths[0] <= rec.line_lengths[1]);
    CHECK(rec.line_lengths[1] >= 2);  // n1=6 > 0 forces at least one line
  }
  const json& agg = result.grid[0].aggregates;
  REQUIRE(agg.contains("line_quantiles"));
  CHECK(agg["line_quantiles"].size() == 2);
  CHECK(agg["line_quantiles"][1]["p"] == 1.0);

  json bad = j;
  bad["line_quantiles"] = {0.0};
  CHECK_THROWS_AS(mc::ExperimentConfig::from_json(bad), error);
}

TEST_CASE("rescaled statistics demand ell_ne2 > 0") {
  json j = small_config_json();
  j["family"] = {{"regime", "pure"}, {"n_grid", {20}}};
  const auto config = mc::ExperimentConfig::from_json(j);
  CHECK_THROWS_AS(mc::run(config), error);
  try {
    mc::run(config);
  } catch (const error& e) {
    CHECK(e.code() == errc::no_kernel_half_edges);
  }
}
