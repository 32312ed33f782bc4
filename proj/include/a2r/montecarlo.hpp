#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "a2r/degree_sequence.hpp"

namespace a2r::mc {

using json = nlohmann::json;

// n -> count rule used to parametrize degree-sequence families.
struct CountRule {
  enum class Kind { Const, NMinus, Pow };
  Kind kind = Kind::Const;
  std::uint64_t value = 0;  // Const: value; NMinus: n - value
  double coef = 1.0;        // Pow: round(coef * n^exponent)
  double exponent = 0.5;

  std::uint64_t eval(std::uint64_t n) const;
  static CountRule parse(const json& j);
  json to_json() const;
};

// Family of degree sequences over an n-grid.
//   upper: n - count(n) degree-2 vertices plus count(n) vertices of `degree`
//   lower: n - count(n) degree-2 vertices plus count(n) degree-1 vertices
//   pure:  n degree-2 vertices
struct Family {
  enum class Regime { Upper, Lower, Pure };
  Regime regime = Regime::Upper;
  std::vector<std::uint64_t> n_grid;
  std::uint32_t degree = 3;  // upper only
  CountRule count;

  DegreeSequence instantiate(std::uint64_t n) const;
  static Family parse(const json& j);
  json to_json() const;
};

enum class Statistic : std::uint8_t {
  Deficiency,        // n - |C_max|
  SecondRescaled,    // |C_2| * lne2 / n
  CyclicVertices,    // C(n)
  TopSizes,          // top_k largest component sizes
  SWindow,           // S_n^(a)(t n2/lne2) for each window
  Non2OutsideGiant,  // #degree-!=2 vertices outside C_max
  LineQuantiles,     // quantiles of the line-component length distribution
};

const char* statistic_name(Statistic s) noexcept;
Statistic statistic_from_name(const std::string& name);

struct SWindow {
  double a = 0.2;
  double t = 2.0;
};

struct ExperimentConfig {
  Family family;
  std::uint64_t replicates = 1;
  std::uint64_t master_seed = 0;
  unsigned workers = 0;  // 0 = hardware concurrency; never changes results
  std::vector<Statistic> statistics;
  std::vector<SWindow> s_windows;
  std::vector<unsigned> moment_orders{1, 2};
  unsigned top_k = 8;
  std::vector<double> line_quantiles{0.5, 1.0};  // nearest-rank, p in (0,1]

  static ExperimentConfig from_json(const json& j);
  json to_json() const;
  // FNV-1a over the canonical JSON dump.
  std::string hash() const;
};

// One replicate's reduced statistics; the sampled graph is discarded.
struct ReplicateRecord {
  std::uint64_t seed = 0;
  double deficiency = 0.0;
  double second_rescaled = 0.0;
  double cyclic_vertices = 0.0;
  std::uint64_t non2_outside = 0;
  std::vector<std::uint64_t> s_counts;      // one per window
  std::vector<std::uint64_t> top_sizes;     // top_k, zero-padded
  std::vector<std::uint64_t> line_lengths;  // one per requested quantile
};

struct GridPointResult {
  std::uint64_t n = 0;
  std::uint64_t n2 = 0;
  std::uint64_t ell = 0;
  std::uint64_t ell_ne2 = 0;
  std::vector<ReplicateRecord> records;
  json aggregates;
};

struct ExperimentResult {
  ExperimentConfig config;
  std::vector<GridPointResult> grid;

  // Aggregates + metadata; per-replicate records go to CSV.
  json to_json() const;
  void write_records_csv(std::ostream& out) const;
  // Empirical-vs-theory CDF overlay for the rescaled second component:
  // columns a, empirical, theoretical.
  void write_cdf_overlay_csv(std::ostream& out, std::size_t grid_index) const;
};

// Deterministic in config: replicate i of grid point g uses seed
// rng::mix(master_seed, g, i); records are folded in replicate order, so
// the result is bit-identical for any worker count.
ExperimentResult run(const ExperimentConfig& config);

// Replicate range [begin, end) of one grid point, for merge/associativity.
std::vector<ReplicateRecord> run_range(const ExperimentConfig& config,
                                       std::size_t grid_index, std::uint64_t begin,
                                       std::uint64_t end);

// Recomputes aggregates from records (used by run and by merge tests).
json aggregate(const ExperimentConfig& config, const DegreeSequence& seq,
               const std::vector<ReplicateRecord>& records);

}  // namespace a2r::mc
