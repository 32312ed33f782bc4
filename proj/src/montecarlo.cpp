#include "a2r/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <mutex>
#include <ostream>
#include <thread>

#include "a2r/components.hpp"
#include "a2r/errors.hpp"
#include "a2r/rng.hpp"
#include "a2r/sampler.hpp"
#include "a2r/stats.hpp"
#include "a2r/theory.hpp"
#include "a2r/version.hpp"

namespace a2r::mc {

namespace {

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

bool has_stat(const ExperimentConfig& config, Statistic s) {
  return std::find(config.statistics.begin(), config.statistics.end(), s) !=
         config.statistics.end();
}

}  // namespace

std::uint64_t CountRule::eval(std::uint64_t n) const {
  switch (kind) {
    case Kind::Const:
      return value;
    case Kind::NMinus:
      if (value > n)
        throw_error(errc::bad_config, "n-minus rule underflows at n=" + std::to_string(n));
      return n - value;
    case Kind::Pow: {
      const double x = coef * std::pow(static_cast<double>(n), exponent);
      if (!(x >= 0.0) || x > 9e18) throw_error(errc::bad_config, "pow rule out of range");
      return static_cast<std::uint64_t>(std::llround(x));
    }
  }
  throw_error(errc::bad_config, "unknown count rule");
}

CountRule CountRule::parse(const json& j) {
  CountRule rule;
  const std::string kind = j.value("kind", "");
  if (kind == "const") {
    rule.kind = Kind::Const;
    rule.value = j.at("value").get<std::uint64_t>();
  } else if (kind == "n_minus") {
    rule.kind = Kind::NMinus;
    rule.value = j.at("value").get<std::uint64_t>();
  } else if (kind == "pow") {
    rule.kind = Kind::Pow;
    rule.coef = j.at("coef").get<double>();
    rule.exponent = j.at("exponent").get<double>();
  } else {
    throw_error(errc::bad_config, "count rule kind must be const | n_minus | pow");
  }
  return rule;
}

json CountRule::to_json() const {
  switch (kind) {
    case Kind::Const: return {{"kind", "const"}, {"value", value}};
    case Kind::NMinus: return {{"kind", "n_minus"}, {"value", value}};
    case Kind::Pow: return {{"kind", "pow"}, {"coef", coef}, {"exponent", exponent}};
  }
  return {};
}

DegreeSequence Family::instantiate(std::uint64_t n) const {
  switch (regime) {
    case Regime::Pure:
      return DegreeSequence::build_upper(n, {});
    case Regime::Upper: {
      const std::uint64_t c = count.eval(n);
      if (c > n) throw_error(errc::bad_config, "count rule exceeds n");
      return DegreeSequence::build_upper(n - c, {{degree, c}});
    }
    case Regime::Lower: {
      const std::uint64_t c = count.eval(n);
      if (c > n) throw_error(errc::bad_config, "count rule exceeds n");
      return DegreeSequence::build_lower(n - c, c);
    }
  }
  throw_error(errc::bad_config, "unknown regime");
}

Family Family::parse(const json& j) {
  Family family;
  const std::string regime = j.value("regime", "");
  if (regime == "upper")
    family.regime = Regime::Upper;
  else if (regime == "lower")
    family.regime = Regime::Lower;
  else if (regime == "pure")
    family.regime = Regime::Pure;
  else
    throw_error(errc::bad_config, "family.regime must be upper | lower | pure");
  family.n_grid = j.at("n_grid").get<std::vector<std::uint64_t>>();
  if (family.n_grid.empty()) throw_error(errc::bad_config, "family.n_grid is empty");
  if (family.regime == Regime::Upper) {
    family.degree = j.value("degree", 3u);
    if (family.degree < 3)
      throw_error(errc::bad_config, "upper family degree must be >= 3");
  }
  if (family.regime != Regime::Pure) family.count = CountRule::parse(j.at("count"));
  return family;
}

json Family::to_json() const {
  json j;
  switch (regime) {
    case Regime::Upper: j["regime"] = "upper"; break;
    case Regime::Lower: j["regime"] = "lower"; break;
    case Regime::Pure: j["regime"] = "pure"; break;
  }
  j["n_grid"] = n_grid;
  if (regime == Regime::Upper) j["degree"] = degree;
  if (regime != Regime::Pure) j["count"] = count.to_json();
  return j;
}

const char* statistic_name(Statistic s) noexcept {
  switch (s) {
    case Statistic::Deficiency: return "deficiency";
    case Statistic::SecondRescaled: return "second_rescaled";
    case Statistic::CyclicVertices: return "cyclic_vertices";
    case Statistic::TopSizes: return "top_sizes";
    case Statistic::SWindow: return "s_window";
    case Statistic::Non2OutsideGiant: return "non2_outside_giant";
    case Statistic::LineQuantiles: return "line_quantiles";
  }
  return "?";
}

Statistic statistic_from_name(const std::string& name) {
  for (const Statistic s :
       {Statistic::Deficiency, Statistic::SecondRescaled, Statistic::CyclicVertices,
        Statistic::TopSizes, Statistic::SWindow, Statistic::Non2OutsideGiant,
        Statistic::LineQuantiles})
    if (name == statistic_name(s)) return s;
  throw_error(errc::bad_config, "unknown statistic '" + name + "'");
}

ExperimentConfig ExperimentConfig::from_json(const json& j) {
  ExperimentConfig config;
  config.family = Family::parse(j.at("family"));
  config.replicates = j.at("replicates").get<std::uint64_t>();
  if (config.replicates < 1) throw_error(errc::bad_config, "replicates must be >= 1");
  if (!j.contains("master_seed"))
    throw_error(errc::bad_config, "master_seed is required (reproducibility-first)");
  config.master_seed = j.at("master_seed").get<std::uint64_t>();
  config.workers = j.value("workers", 0u);
  for (const auto& name : j.at("statistics"))
    config.statistics.push_back(statistic_from_name(name.get<std::string>()));
  if (j.contains("s_windows"))
    for (const auto& w : j.at("s_windows"))
      config.s_windows.push_back(SWindow{w.at("a").get<double>(), w.at("t").get<double>()});
  for (const SWindow& w : config.s_windows)
    if (!(w.a > 0.0) || !(w.t >= w.a))
      throw_error(errc::bad_config, "s_windows entries need 0 < a <= t");
  if (has_stat(config, Statistic::SWindow) && config.s_windows.empty())
    throw_error(errc::bad_config, "s_window statistic requires s_windows");
  if (j.contains("moment_orders"))
    config.moment_orders = j.at("moment_orders").get<std::vector<unsigned>>();
  config.top_k = j.value("top_k", 8u);
  if (config.top_k < 1) throw_error(errc::bad_config, "top_k must be >= 1");
  if (j.contains("line_quantiles"))
    config.line_quantiles = j.at("line_quantiles").get<std::vector<double>>();
  for (const double p : config.line_quantiles)
    if (!(p > 0.0) || p > 1.0)
      throw_error(errc::bad_config, "line quantiles must lie in (0, 1]");
  return config;
}

json ExperimentConfig::to_json() const {
  json j;
  j["family"] = family.to_json();
  j["replicates"] = replicates;
  j["master_seed"] = master_seed;
  j["workers"] = workers;
  json stats = json::array();
  for (const Statistic s : statistics) stats.push_back(statistic_name(s));
  j["statistics"] = std::move(stats);
  json windows = json::array();
  for (const SWindow& w : s_windows) windows.push_back({{"a", w.a}, {"t", w.t}});
  j["s_windows"] = std::move(windows);
  j["moment_orders"] = moment_orders;
  j["top_k"] = top_k;
  j["line_quantiles"] = line_quantiles;
  return j;
}

std::string ExperimentConfig::hash() const {
  const std::string dump = to_json().dump();
  std::uint64_t h = 0xCBF29CE484222325ULL;
  for (const char c : dump) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001B3ULL;
  }
  char buf[20];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

namespace {

void validate_grid_point(const ExperimentConfig& config, const DegreeSequence& seq,
                         std::uint64_t n) {
  const bool needs_lne2 =
      has_stat(config, Statistic::SecondRescaled) || has_stat(config, Statistic::SWindow);
  if (needs_lne2 && seq.ell_ne2() == 0)
    throw_error(errc::no_kernel_half_edges,
                "grid point n=" + std::to_string(n) +
                    " has ell_ne2=0 but a rescaled statistic was requested");
}

ReplicateRecord compute_replicate(const ExperimentConfig& config, const DegreeSequence& seq,
                                  std::uint64_t seed) {
  ReplicateRecord rec;
  rec.seed = seed;
  const MultiGraph g = sample(seq, seed);
  const ComponentReport report = analyze(g);

  if (has_stat(config, Statistic::Deficiency))
    rec.deficiency = static_cast<double>(deficiency(report));
  if (has_stat(config, Statistic::SecondRescaled)) {
    const std::uint64_t c2 = report.sizes_desc.size() > 1 ? report.sizes_desc[1] : 0;
    rec.second_rescaled = static_cast<double>(c2) * static_cast<double>(seq.ell_ne2()) /
                          static_cast<double>(seq.n());
  }
  if (has_stat(config, Statistic::CyclicVertices))
    rec.cyclic_vertices = static_cast<double>(report.cyclic_vertices);
  if (has_stat(config, Statistic::Non2OutsideGiant))
    rec.non2_outside = report.non2_outside_giant;
  if (has_stat(config, Statistic::SWindow)) {
    rec.s_counts.reserve(config.s_windows.size());
    for (const SWindow& w : config.s_windows)
      rec.s_counts.push_back(s_process(report, seq, w.a, w.t));
  }
  if (has_stat(config, Statistic::TopSizes)) {
    rec.top_sizes.assign(config.top_k, 0);
    for (std::size_t i = 0; i < config.top_k && i < report.sizes_desc.size(); ++i)
      rec.top_sizes[i] = report.sizes_desc[i];
  }
  if (has_stat(config, Statistic::LineQuantiles)) {
    // nearest-rank quantile of the line lengths: p -> ceil(p*m)-th smallest,
    // i.e. index m - ceil(p*m) in the descending list; 0 when no lines
    const auto& lines = report.line_sizes_desc;
    rec.line_lengths.reserve(config.line_quantiles.size());
    for (const double p : config.line_quantiles) {
      if (lines.empty()) {
        rec.line_lengths.push_back(0);
        continue;
      }
      const auto m = static_cast<std::uint64_t>(lines.size());
      const auto rank = static_cast<std::uint64_t>(
          std::ceil(p * static_cast<double>(m)));  // 1-based from below
      rec.line_lengths.push_back(lines[m - std::max<std::uint64_t>(rank, 1)]);
    }
  }
  return rec;
}

}  // namespace

std::vector<ReplicateRecord> run_range(const ExperimentConfig& config,
                                       std::size_t grid_index, std::uint64_t begin,
                                       std::uint64_t end) {
  if (grid_index >= config.family.n_grid.size())
    throw_error(errc::out_of_range, "grid index");
  const std::uint64_t n = config.family.n_grid[grid_index];
  const DegreeSequence seq = config.family.instantiate(n);
  validate_grid_point(config, seq, n);

  std::vector<ReplicateRecord> records(end - begin);
  const unsigned hw = std::thread::hardware_concurrency();
  unsigned workers = config.workers ? config.workers : (hw ? hw : 1);
  workers = static_cast<unsigned>(
      std::min<std::uint64_t>(workers, end - begin));

  std::atomic<std::uint64_t> next{begin};
  std::exception_ptr first_error;
  std::mutex error_mutex;

  auto work = [&] {
    for (;;) {
      const std::uint64_t i = next.fetch_add(1);
      if (i >= end) return;
      try {
        records[i - begin] =
            compute_replicate(config, seq, rng::mix(config.master_seed, grid_index, i));
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
        return;
      }
    }
  };

  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  if (first_error) std::rethrow_exception(first_error);
  return records;
}

json aggregate(const ExperimentConfig& config, const DegreeSequence& seq,
               const std::vector<ReplicateRecord>& records) {
  json agg;
  agg["replicates"] = records.size();

  auto scalar_block = [&](auto getter) {
    std::vector<double> xs(records.size());
    std::transform(records.begin(), records.end(), xs.begin(), getter);
    const stats::MeanSE m = stats::mean_se(xs);
    return json{{"mean", m.mean}, {"se", m.se}};
  };

  if (has_stat(config, Statistic::Deficiency))
    agg["deficiency"] = scalar_block([](const ReplicateRecord& r) { return r.deficiency; });
  if (has_stat(config, Statistic::CyclicVertices))
    agg["cyclic_vertices"] =
        scalar_block([](const ReplicateRecord& r) { return r.cyclic_vertices; });

  if (has_stat(config, Statistic::SecondRescaled)) {
    std::vector<double> xs(records.size());
    std::transform(records.begin(), records.end(), xs.begin(),
                   [](const ReplicateRecord& r) { return r.second_rescaled; });
    std::sort(xs.begin(), xs.end());
    const stats::MeanSE m = stats::mean_se(xs);
    const double ks = stats::ks_distance(
        xs, [](double x) { return x > 0.0 ? theory::cdf_Y2(x) : 0.0; });
    agg["second_rescaled"] = {
        {"mean", m.mean}, {"se", m.se}, {"ks_vs_cdf_y2", ks}, {"sorted_sample", xs}};
  }

  if (has_stat(config, Statistic::Non2OutsideGiant)) {
    std::vector<double> flag(records.size());
    std::transform(records.begin(), records.end(), flag.begin(),
                   [](const ReplicateRecord& r) { return r.non2_outside > 0 ? 1.0 : 0.0; });
    const stats::MeanSE f = stats::mean_se(flag);
    agg["non2_outside_giant"] = {{"fraction_nonzero", f.mean}, {"se", f.se}};
  }

  if (has_stat(config, Statistic::SWindow)) {
    json windows = json::array();
    for (std::size_t w = 0; w < config.s_windows.size(); ++w) {
      const SWindow& win = config.s_windows[w];
      std::vector<std::uint64_t> counts(records.size());
      std::transform(records.begin(), records.end(), counts.begin(),
                     [w](const ReplicateRecord& r) { return r.s_counts[w]; });
      const double mu = theory::poisson_mean(win.a, win.t);
      json moments = json::array();
      for (const unsigned h : config.moment_orders) {
        moments.push_back({{"h", h},
                           {"estimate", stats::factorial_moment(counts, h)},
                           {"jackknife_se", stats::factorial_moment_jackknife_se(counts, h)},
                           {"poisson_reference", std::pow(mu, h)}});
      }
      std::vector<double> zero(records.size());
      std::transform(counts.begin(), counts.end(), zero.begin(),
                     [](std::uint64_t c) { return c == 0 ? 1.0 : 0.0; });
      const stats::MeanSE z = stats::mean_se(zero);
      windows.push_back({{"a", win.a},
                         {"t", win.t},
                         {"mu", mu},
                         {"factorial_moments", std::move(moments)},
                         {"p_zero", z.mean},
                         {"p_zero_se", z.se},
                         {"p_zero_reference", std::exp(-mu)}});
    }
    agg["s_windows"] = std::move(windows);
  }

  if (has_stat(config, Statistic::LineQuantiles)) {
    json quantiles = json::array();
    for (std::size_t q = 0; q < config.line_quantiles.size(); ++q) {
      std::vector<double> xs(records.size());
      std::transform(records.begin(), records.end(), xs.begin(),
                     [q](const ReplicateRecord& r) {
                       return static_cast<double>(r.line_lengths[q]);
                     });
      const stats::MeanSE m = stats::mean_se(xs);
      quantiles.push_back(
          {{"p", config.line_quantiles[q]}, {"mean", m.mean}, {"se", m.se}});
    }
    agg["line_quantiles"] = std::move(quantiles);
  }

  if (has_stat(config, Statistic::TopSizes)) {
    std::vector<double> largest(records.size());
    std::transform(records.begin(), records.end(), largest.begin(),
                   [](const ReplicateRecord& r) {
                     return r.top_sizes.empty() ? 0.0 : static_cast<double>(r.top_sizes[0]);
                   });
    const stats::MeanSE m = stats::mean_se(largest);
    agg["top_sizes"] = {{"largest_mean", m.mean},
                        {"largest_se", m.se},
                        {"largest_median", stats::median(largest)}};
  }

  (void)seq;
  return agg;
}

ExperimentResult run(const ExperimentConfig& config) {
  ExperimentResult result;
  result.config = config;
  for (std::size_t gi = 0; gi < config.family.n_grid.size(); ++gi) {
    const std::uint64_t n = config.family.n_grid[gi];
    const DegreeSequence seq = config.family.instantiate(n);
    validate_grid_point(config, seq, n);
    GridPointResult point;
    point.n = n;
    point.n2 = seq.count(2);
    point.ell = seq.ell();
    point.ell_ne2 = seq.ell_ne2();
    point.records = run_range(config, gi, 0, config.replicates);
    point.aggregates = aggregate(config, seq, point.records);
    result.grid.push_back(std::move(point));
  }
  return result;
}

json ExperimentResult::to_json() const {
  json j;
  j["meta"] = {{"version", kVersion},
               {"generator", rng::kGeneratorName},
               {"config", config.to_json()},
               {"config_hash", config.hash()}};
  json grid_json = json::array();
  for (const GridPointResult& point : grid) {
    grid_json.push_back({{"n", point.n},
                         {"n2", point.n2},
                         {"ell", point.ell},
                         {"ell_ne2", point.ell_ne2},
                         {"aggregates", point.aggregates}});
  }
  j["grid"] = std::move(grid_json);
  return j;
}

void ExperimentResult::write_records_csv(std::ostream& out) const {
  out << "grid_index,n,replicate,seed";
  if (has_stat(config, Statistic::Deficiency)) out << ",deficiency";
  if (has_stat(config, Statistic::SecondRescaled)) out << ",second_rescaled";
  if (has_stat(config, Statistic::CyclicVertices)) out << ",cyclic_vertices";
  if (has_stat(config, Statistic::Non2OutsideGiant)) out << ",non2_outside_giant";
  if (has_stat(config, Statistic::SWindow))
    for (std::size_t w = 0; w < config.s_windows.size(); ++w) out << ",s_window_" << w;
  if (has_stat(config, Statistic::TopSizes))
    for (unsigned k = 0; k < config.top_k; ++k) out << ",top_size_" << k;
  if (has_stat(config, Statistic::LineQuantiles))
    for (std::size_t q = 0; q < config.line_quantiles.size(); ++q)
      out << ",line_q_" << q;
  out << '\n';

  for (std::size_t gi = 0; gi < grid.size(); ++gi) {
    const GridPointResult& point = grid[gi];
    for (std::size_t i = 0; i < point.records.size(); ++i) {
      const ReplicateRecord& r = point.records[i];
      out << gi << ',' << point.n << ',' << i << ',' << r.seed;
      if (has_stat(config, Statistic::Deficiency)) out << ',' << format_double(r.deficiency);
      if (has_stat(config, Statistic::SecondRescaled))
        out << ',' << format_double(r.second_rescaled);
      if (has_stat(config, Statistic::CyclicVertices))
        out << ',' << format_double(r.cyclic_vertices);
      if (has_stat(config, Statistic::Non2OutsideGiant)) out << ',' << r.non2_outside;
      if (has_stat(config, Statistic::SWindow))
        for (const std::uint64_t c : r.s_counts) out << ',' << c;
      if (has_stat(config, Statistic::TopSizes))
        for (const std::uint64_t s : r.top_sizes) out << ',' << s;
      if (has_stat(config, Statistic::LineQuantiles))
        for (const std::uint64_t s : r.line_lengths) out << ',' << s;
      out << '\n';
    }
  }
}

void ExperimentResult::write_cdf_overlay_csv(std::ostream& out,
                                             std::size_t grid_index) const {
  if (grid_index >= grid.size()) throw_error(errc::out_of_range, "grid index");
  const json& agg = grid[grid_index].aggregates;
  if (!agg.contains("second_rescaled"))
    throw_error(errc::bad_config, "no second_rescaled statistic in this result");
  const auto sample = agg["second_rescaled"]["sorted_sample"].get<std::vector<double>>();
  out << "a,empirical,theoretical\n";
  for (std::size_t i = 0; i < sample.size(); ++i) {
    const double a = sample[i];
    const double empirical = static_cast<double>(i + 1) / static_cast<double>(sample.size());
    const double theoretical = a > 0.0 ? theory::cdf_Y2(a) : 0.0;
    out << format_double(a) << ',' << format_double(empirical) << ','
        << format_double(theoretical) << '\n';
  }
}

}  // namespace a2r::mc
