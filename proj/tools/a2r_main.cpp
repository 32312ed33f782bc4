// Command-line front end: sampling, enumeration, kernel contraction,
// exploration, closed-form evaluation and replicated experiments.
//
// Exit codes: 0 success, 1 domain error (odd degree sums, bad windows, ...),
// 2 usage error.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "a2r/components.hpp"
#include "a2r/errors.hpp"
#include "a2r/exploration.hpp"
#include "a2r/io.hpp"
#include "a2r/kernel.hpp"
#include "a2r/montecarlo.hpp"
#include "a2r/rng.hpp"
#include "a2r/sampler.hpp"
#include "a2r/theory.hpp"
#include "a2r/version.hpp"

namespace {

using a2r::DegreeSequence;
using json = nlohmann::json;

std::string fmt_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

// ---------------------------------------------------------------------------
// degree-sequence flags shared by the graph-producing subcommands
// ---------------------------------------------------------------------------

struct SeqOptions {
  std::uint64_t n2 = 0;
  bool n2_set = false;
  std::vector<std::string> deg;  // "degree:count"
  std::uint64_t n1 = 0;
  bool n1_set = false;
  std::string degree_file;

  void attach(CLI::App* cmd) {
    cmd->add_option("--n2", n2, "number of degree-2 vertices")
        ->each([this](const std::string&) { n2_set = true; });
    cmd->add_option("--deg", deg,
                    "higher degree classes as degree:count (repeatable), e.g. --deg 3:30");
    cmd->add_option("--n1", n1, "number of degree-1 vertices (lower regime)")
        ->each([this](const std::string&) { n1_set = true; });
    cmd->add_option("--degree-file", degree_file, "text file with one degree per line");
  }

  bool any() const { return n2_set || n1_set || !deg.empty() || !degree_file.empty(); }

  DegreeSequence build() const {
    if (!degree_file.empty()) {
      if (n2_set || n1_set || !deg.empty())
        throw CLI::ValidationError("--degree-file excludes --n2/--n1/--deg");
      return DegreeSequence::load_file(degree_file);
    }
    if (n1_set) {
      if (!deg.empty()) throw CLI::ValidationError("--n1 excludes --deg");
      return DegreeSequence::build_lower(n2, n1);
    }
    if (!n2_set && deg.empty())
      throw CLI::ValidationError("no degree sequence given (--n2/--deg/--n1/--degree-file)");
    std::map<std::uint32_t, std::uint64_t> higher;
    for (const std::string& spec : deg) {
      const auto colon = spec.find(':');
      if (colon == std::string::npos)
        throw CLI::ValidationError("--deg expects degree:count, got '" + spec + "'");
      try {
        const std::uint64_t d = std::stoull(spec.substr(0, colon));
        const std::uint64_t c = std::stoull(spec.substr(colon + 1));
        higher[static_cast<std::uint32_t>(d)] += c;
      } catch (const std::exception&) {
        throw CLI::ValidationError("--deg expects degree:count, got '" + spec + "'");
      }
    }
    return DegreeSequence::build_upper(n2, higher);
  }

  json resolved() const {
    json j;
    if (!degree_file.empty()) {
      j["degree_file"] = degree_file;
      return j;
    }
    j["n2"] = n2;
    if (n1_set) j["n1"] = n1;
    if (!deg.empty()) j["deg"] = deg;
    return j;
  }
};

// Output sink: stdout by default, file with --out.
struct OutFile {
  std::string path;
  std::ofstream file;

  std::ostream& open() {
    if (path.empty()) return std::cout;
    file.open(path);
    if (!file) a2r::throw_error(a2r::errc::io_error, "cannot write " + path);
    return file;
  }
};

void write_text_meta(std::ostream& out, const char* command, const json& config,
                     std::optional<std::uint64_t> seed) {
  out << "# a2r " << command << '\n';
  out << "# version " << a2r::kVersion << '\n';
  out << "# generator " << a2r::rng::kGeneratorName << '\n';
  out << "# config " << config.dump() << '\n';
  if (seed) out << "# seed " << *seed << '\n';
}

json make_meta(const char* command, const json& config, std::optional<std::uint64_t> seed) {
  json meta{{"command", command},
            {"version", a2r::kVersion},
            {"generator", a2r::rng::kGeneratorName},
            {"config", config}};
  if (seed) meta["seed"] = *seed;
  return meta;
}

std::uint64_t entropy_seed() {
  std::random_device rd;
  return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
}

std::string default_out_dir() {
  const char* env = std::getenv("A2R_OUT_DIR");
  return env && *env ? env : ".";
}

// ---------------------------------------------------------------------------
// subcommand bodies
// ---------------------------------------------------------------------------

int cmd_sample(const SeqOptions& seq_opts, std::optional<std::uint64_t> seed,
               const std::string& format, OutFile& out_file) {
  if (format != "edges" && format != "hedges" && format != "dot" && format != "json")
    throw CLI::ValidationError("--format must be edges|hedges|dot|json");
  const DegreeSequence seq = seq_opts.build();
  const std::uint64_t used_seed = seed ? *seed : entropy_seed();
  const auto g = a2r::sample(seq, used_seed);
  std::ostream& out = out_file.open();
  const json config = seq_opts.resolved();

  if (format == "json") {
    json doc{{"meta", make_meta("sample", config, used_seed)}};
    json edges = json::array();
    for (const auto& [a, b] : g.half_edge_pairs())
      edges.push_back({{"u", a.vertex}, {"u_slot", a.slot}, {"v", b.vertex}, {"v_slot", b.slot}});
    doc["edges"] = std::move(edges);
    out << doc.dump(2) << '\n';
    return 0;
  }
  write_text_meta(out, "sample", config, used_seed);
  if (format == "edges")
    a2r::io::write_edge_list(out, g);
  else if (format == "hedges")
    a2r::io::write_half_edge_list(out, g);
  else
    a2r::io::write_dot(out, g);
  return 0;
}

int cmd_enumerate(const SeqOptions& seq_opts, const std::string& format, OutFile& out_file) {
  using Rational = a2r::theory::Rational;
  if (format != "text" && format != "json")
    throw CLI::ValidationError("--format must be text|json");
  const DegreeSequence seq = seq_opts.build();
  a2r::MatchingEnumerator en(seq);

  std::map<std::uint64_t, Rational> cycle_sums;
  Rational cyclic_total(0);
  std::uint64_t count = 0;

  std::ostream& out = out_file.open();
  const json config = seq_opts.resolved();
  json matchings = json::array();
  const bool as_json = format == "json";
  if (!as_json) write_text_meta(out, "enumerate", config, std::nullopt);

  while (auto g = en.next()) {
    ++count;
    const auto report = a2r::analyze(*g);
    cyclic_total += report.cyclic_vertices;
    for (const auto& [k, c] : report.cycle_hist) cycle_sums[k] += c;
    if (as_json) {
      json pairs = json::array();
      for (const auto& [a, b] : g->pairs()) pairs.push_back({a, b});
      matchings.push_back(std::move(pairs));
    } else {
      bool first = true;
      for (const auto& [a, b] : g->pairs()) {
        out << (first ? "" : " ") << a << '-' << b;
        first = false;
      }
      out << '\n';
    }
  }

  auto rational_str = [](const Rational& r) {
    std::ostringstream ss;
    ss << r;
    return ss.str();
  };

  json summary;
  summary["matchings"] = count;
  summary["expected_cyclic_vertices"] = {
      {"enumeration", rational_str(cyclic_total / count)},
      {"theory", rational_str(a2r::theory::expected_cyclic_vertices(seq))}};
  json per_k = json::object();
  for (std::uint64_t k = 1; k <= seq.count(2); ++k) {
    const Rational emp = cycle_sums.count(k) ? cycle_sums[k] / count : Rational(0);
    per_k[std::to_string(k)] = {{"enumeration", rational_str(emp)},
                                {"theory", rational_str(a2r::theory::expected_cycle_count(seq, k))}};
  }
  summary["expected_cycle_count"] = std::move(per_k);

  if (as_json) {
    json doc{{"meta", make_meta("enumerate", config, std::nullopt)},
             {"matchings", std::move(matchings)},
             {"summary", std::move(summary)}};
    out << doc.dump(2) << '\n';
  } else {
    out << "# matchings " << count << '\n';
    out << "# E[C(n)] " << summary["expected_cyclic_vertices"]["enumeration"].get<std::string>()
        << " (theory " << summary["expected_cyclic_vertices"]["theory"].get<std::string>()
        << ")\n";
    for (const auto& [k, v] : summary["expected_cycle_count"].items())
      out << "# E[C_n(" << k << ")] " << v["enumeration"].get<std::string>() << " (theory "
          << v["theory"].get<std::string>() << ")\n";
  }
  return 0;
}

int cmd_kernel(const SeqOptions& seq_opts, std::optional<std::uint64_t> seed,
               const std::string& format, OutFile& out_file, const std::string& map_out) {
  if (format != "edges" && format != "hedges")
    throw CLI::ValidationError("--format must be edges|hedges");
  const DegreeSequence seq = seq_opts.build();
  const std::uint64_t used_seed = seed ? *seed : entropy_seed();
  const auto g = a2r::sample(seq, used_seed);
  const auto k = a2r::contract(g);

  std::ostream& out = out_file.open();
  json config = seq_opts.resolved();
  write_text_meta(out, "kernel", config, used_seed);
  out << "# kernel_vertices " << k.back_map.size() << '\n';
  out << "# dropped_cycles " << k.dropped_cycles << '\n';
  if (format == "edges")
    a2r::io::write_edge_list(out, k.graph);
  else
    a2r::io::write_half_edge_list(out, k.graph);

  if (!map_out.empty()) {
    std::ofstream map_file(map_out);
    if (!map_file) a2r::throw_error(a2r::errc::io_error, "cannot write " + map_out);
    a2r::io::write_back_map(map_file, k);
  }
  return 0;
}

int cmd_explore(const SeqOptions& seq_opts, std::optional<std::uint64_t> seed,
                std::optional<std::uint64_t> start, std::optional<std::uint32_t> start_degree,
                bool lazy, std::uint64_t cap, std::uint64_t traces, OutFile& out_file) {
  const DegreeSequence seq = seq_opts.build();
  if (!start && !start_degree)
    throw CLI::ValidationError("need --start or --start-degree");
  if (!lazy && traces > 1)
    throw CLI::ValidationError("--traces needs --lazy (one graph = one trace per start)");
  const std::uint64_t used_seed = seed ? *seed : entropy_seed();
  const std::uint64_t used_cap = cap == 0 ? seq.n() : cap;

  std::ostream& out = out_file.open();
  for (std::uint64_t i = 0; i < traces; ++i) {
    const std::uint64_t trace_seed = traces == 1 ? used_seed : a2r::rng::mix(used_seed, i);
    a2r::rng::Xoshiro256StarStar start_gen(a2r::rng::mix(trace_seed, 0x57A7));
    const std::uint64_t v =
        start ? *start : a2r::uniform_vertex_of_degree(seq, *start_degree, start_gen);
    a2r::ExplorationTrace trace;
    if (lazy) {
      trace = a2r::explore_lazy(seq, v, trace_seed, used_cap);
    } else {
      const auto g = a2r::sample(seq, trace_seed);
      trace = a2r::explore(g, v);
    }
    json record = a2r::io::trace_to_json(trace);
    record["seed"] = trace_seed;
    record["mode"] = lazy ? "lazy" : "eager";
    out << record.dump() << '\n';
  }
  return 0;
}

int cmd_experiment(const std::string& config_path, std::optional<std::uint64_t> seed,
                   std::string out_dir, std::optional<unsigned> workers) {
  std::ifstream in(config_path);
  if (!in) a2r::throw_error(a2r::errc::io_error, "cannot read " + config_path);
  json j = json::parse(in, nullptr, true, true);  // allow comments
  if (seed) j["master_seed"] = *seed;
  if (!j.contains("master_seed"))
    throw CLI::ValidationError("experiment mode needs --seed or a master_seed in the config");
  if (workers) j["workers"] = *workers;

  const auto config = a2r::mc::ExperimentConfig::from_json(j);
  const auto result = a2r::mc::run(config);

  if (out_dir.empty()) out_dir = default_out_dir();
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  const std::string base = out_dir + "/";
  {
    std::ofstream f(base + "result.json");
    if (!f) a2r::throw_error(a2r::errc::io_error, "cannot write " + base + "result.json");
    f << result.to_json().dump(2) << '\n';
  }
  {
    std::ofstream f(base + "replicates.csv");
    if (!f) a2r::throw_error(a2r::errc::io_error, "cannot write " + base + "replicates.csv");
    result.write_records_csv(f);
  }
  for (std::size_t gi = 0; gi < result.grid.size(); ++gi) {
    if (!result.grid[gi].aggregates.contains("second_rescaled")) continue;
    const std::string path = base + "cdf_second_rescaled_" + std::to_string(gi) + ".csv";
    std::ofstream f(path);
    if (!f) a2r::throw_error(a2r::errc::io_error, "cannot write " + path);
    result.write_cdf_overlay_csv(f, gi);
  }

  std::cout << "wrote " << base << "result.json (" << result.grid.size()
            << " grid point(s), " << config.replicates << " replicates)\n";
  for (const auto& point : result.grid) {
    std::cout << "n=" << point.n << " n2=" << point.n2 << " ell_ne2=" << point.ell_ne2;
    if (point.aggregates.contains("deficiency"))
      std::cout << " deficiency=" << fmt_double(point.aggregates["deficiency"]["mean"]);
    if (point.aggregates.contains("second_rescaled"))
      std::cout << " ks=" << fmt_double(point.aggregates["second_rescaled"]["ks_vs_cdf_y2"]);
    std::cout << '\n';
  }
  return 0;
}

int cmd_report(const std::string& result_path, std::string out_dir) {
  std::ifstream in(result_path);
  if (!in) a2r::throw_error(a2r::errc::io_error, "cannot read " + result_path);
  const json doc = json::parse(in);
  if (out_dir.empty()) out_dir = default_out_dir();
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);

  std::cout << "a2r result " << doc["meta"]["version"].get<std::string>() << " config_hash "
            << doc["meta"]["config_hash"].get<std::string>() << '\n';
  for (std::size_t gi = 0; gi < doc["grid"].size(); ++gi) {
    const json& point = doc["grid"][gi];
    std::cout << "grid " << gi << ": n=" << point["n"] << " n2=" << point["n2"]
              << " ell_ne2=" << point["ell_ne2"] << '\n';
    const json& agg = point["aggregates"];
    for (const char* key : {"deficiency", "cyclic_vertices"})
      if (agg.contains(key))
        std::cout << "  " << key << " mean=" << fmt_double(agg[key]["mean"])
                  << " se=" << fmt_double(agg[key]["se"]) << '\n';
    if (agg.contains("second_rescaled")) {
      std::cout << "  second_rescaled ks_vs_cdf_y2="
                << fmt_double(agg["second_rescaled"]["ks_vs_cdf_y2"]) << '\n';
      const auto sample = agg["second_rescaled"]["sorted_sample"].get<std::vector<double>>();
      const std::string path = out_dir + "/cdf_second_rescaled_" + std::to_string(gi) + ".csv";
      std::ofstream f(path);
      if (!f) a2r::throw_error(a2r::errc::io_error, "cannot write " + path);
      f << "a,empirical,theoretical\n";
      for (std::size_t i = 0; i < sample.size(); ++i)
        f << fmt_double(sample[i]) << ','
          << fmt_double(static_cast<double>(i + 1) / static_cast<double>(sample.size())) << ','
          << fmt_double(sample[i] > 0 ? a2r::theory::cdf_Y2(sample[i]) : 0.0) << '\n';
      std::cout << "  wrote " << path << '\n';
    }
    if (agg.contains("s_windows"))
      for (const json& w : agg["s_windows"])
        std::cout << "  s_window a=" << w["a"] << " t=" << w["t"]
                  << " mu=" << fmt_double(w["mu"]) << " p_zero=" << fmt_double(w["p_zero"])
                  << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"almost-2-regular configuration-model laboratory"};
  app.require_subcommand(1);
  app.set_version_flag("--version", a2r::kVersion);

  // sample
  auto* sample_cmd = app.add_subcommand("sample", "sample one multigraph");
  SeqOptions sample_seq;
  sample_seq.attach(sample_cmd);
  std::optional<std::uint64_t> sample_seed;
  std::string sample_format = "edges";
  OutFile sample_out;
  sample_cmd->add_option("--seed", sample_seed, "RNG seed (entropy if omitted, echoed)");
  sample_cmd->add_option("--format", sample_format, "edges|hedges|dot|json");
  sample_cmd->add_option("--out", sample_out.path, "output file (stdout if omitted)");

  // enumerate
  auto* enum_cmd = app.add_subcommand("enumerate", "list all matchings (ell <= 14)");
  SeqOptions enum_seq;
  enum_seq.attach(enum_cmd);
  std::string enum_format = "text";
  OutFile enum_out;
  enum_cmd->add_option("--format", enum_format, "text|json");
  enum_cmd->add_option("--out", enum_out.path, "output file (stdout if omitted)");

  // kernel
  auto* kernel_cmd = app.add_subcommand("kernel", "sample and contract degree-2 vertices");
  SeqOptions kernel_seq;
  kernel_seq.attach(kernel_cmd);
  std::optional<std::uint64_t> kernel_seed;
  std::string kernel_format = "edges";
  OutFile kernel_out;
  std::string kernel_map_out;
  kernel_cmd->add_option("--seed", kernel_seed, "RNG seed (entropy if omitted, echoed)");
  kernel_cmd->add_option("--format", kernel_format, "edges|hedges");
  kernel_cmd->add_option("--out", kernel_out.path, "output file (stdout if omitted)");
  kernel_cmd->add_option("--map-out", kernel_map_out, "back-map sidecar file");

  // explore
  auto* explore_cmd = app.add_subcommand("explore", "run the exploration process");
  SeqOptions explore_seq;
  explore_seq.attach(explore_cmd);
  std::optional<std::uint64_t> explore_seed;
  std::optional<std::uint64_t> explore_start;
  std::optional<std::uint32_t> explore_start_degree;
  bool explore_lazy_flag = false;
  std::uint64_t explore_cap = 0;
  std::uint64_t explore_traces = 1;
  OutFile explore_out;
  explore_cmd->add_option("--seed", explore_seed, "RNG seed (entropy if omitted)");
  explore_cmd->add_option("--start", explore_start, "start vertex id");
  explore_cmd->add_option("--start-degree", explore_start_degree,
                          "draw the start uniformly from this degree class");
  explore_cmd->add_flag("--lazy", explore_lazy_flag, "reveal the matching on demand");
  explore_cmd->add_option("--cap", explore_cap, "step cap for lazy mode (default n)");
  explore_cmd->add_option("--traces", explore_traces, "number of traces (lazy batch mode)");
  explore_cmd->add_option("--out", explore_out.path, "output file (stdout if omitted)");

  // theory
  auto* theory_cmd = app.add_subcommand("theory", "evaluate closed forms");
  theory_cmd->require_subcommand(1);

  auto* lambda_cmd = theory_cmd->add_subcommand("lambda", "cycle-process intensity at t");
  double lambda_t = 0;
  lambda_cmd->add_option("--t", lambda_t)->required();

  auto* mean_cmd = theory_cmd->add_subcommand("poisson-mean", "integral of the intensity");
  double mean_a = 0, mean_t = 0;
  mean_cmd->add_option("--a", mean_a)->required();
  mean_cmd->add_option("--t", mean_t)->required();

  auto* cdf_cmd = theory_cmd->add_subcommand("cdf-y2", "CDF of the rescaled second component");
  double cdf_a = 0;
  std::string cdf_method = "auto";
  cdf_cmd->add_option("--a", cdf_a)->required();
  cdf_cmd->add_option("--method", cdf_method, "auto|series|cf");

  auto* ecv_cmd = theory_cmd->add_subcommand("expected-cyclic", "E[C(n)] = n2/(lne2+1)");
  SeqOptions ecv_seq;
  ecv_seq.attach(ecv_cmd);

  auto* ecc_cmd = theory_cmd->add_subcommand("expected-cycle-count", "E[C_n(k)]");
  SeqOptions ecc_seq;
  ecc_seq.attach(ecc_cmd);
  std::uint64_t ecc_k = 1;
  ecc_cmd->add_option("--k", ecc_k)->required();

  auto* surv_cmd = theory_cmd->add_subcommand("line-survival", "k-step survival probability");
  SeqOptions surv_seq;
  surv_seq.attach(surv_cmd);
  std::uint64_t surv_k = 0;
  surv_cmd->add_option("--k", surv_k)->required();

  auto* pred_cmd = theory_cmd->add_subcommand("lower-prediction", "2 n ln(n1)/n1");
  std::uint64_t pred_n = 0, pred_n1 = 0;
  pred_cmd->add_option("--n", pred_n)->required();
  pred_cmd->add_option("--n1", pred_n1)->required();

  auto* table_cmd = theory_cmd->add_subcommand("table", "CSV grid of a theory function");
  std::string table_what = "cdf-y2";
  double table_min = 0.1, table_max = 5.0;
  unsigned table_steps = 50;
  bool table_log = false;
  OutFile table_out;
  table_cmd->add_option("--what", table_what, "cdf-y2|lambda");
  table_cmd->add_option("--min", table_min);
  table_cmd->add_option("--max", table_max);
  table_cmd->add_option("--steps", table_steps);
  table_cmd->add_flag("--log", table_log, "geometric grid");
  table_cmd->add_option("--out", table_out.path, "output file (stdout if omitted)");

  // experiment
  auto* exp_cmd = app.add_subcommand("experiment", "run a replicated experiment");
  std::string exp_config;
  std::optional<std::uint64_t> exp_seed;
  std::string exp_out_dir;
  std::optional<unsigned> exp_workers;
  exp_cmd->add_option("--config", exp_config, "experiment config JSON")->required();
  exp_cmd->add_option("--seed", exp_seed, "master seed (required unless in config)");
  exp_cmd->add_option("--out-dir", exp_out_dir, "output directory ($A2R_OUT_DIR or .)");
  exp_cmd->add_option("--workers", exp_workers, "worker threads (never changes results)");

  // report
  auto* report_cmd = app.add_subcommand("report", "summarize a result.json");
  std::string report_result;
  std::string report_out_dir;
  report_cmd->add_option("--result", report_result, "result.json path")->required();
  report_cmd->add_option("--out-dir", report_out_dir, "output directory for overlays");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (sample_cmd->parsed())
      return cmd_sample(sample_seq, sample_seed, sample_format, sample_out);
    if (enum_cmd->parsed()) return cmd_enumerate(enum_seq, enum_format, enum_out);
    if (kernel_cmd->parsed())
      return cmd_kernel(kernel_seq, kernel_seed, kernel_format, kernel_out, kernel_map_out);
    if (explore_cmd->parsed())
      return cmd_explore(explore_seq, explore_seed, explore_start, explore_start_degree,
                         explore_lazy_flag, explore_cap, explore_traces, explore_out);
    if (theory_cmd->parsed()) {
      if (lambda_cmd->parsed())
        std::cout << fmt_double(a2r::theory::lambda_intensity(lambda_t)) << '\n';
      else if (mean_cmd->parsed())
        std::cout << fmt_double(a2r::theory::poisson_mean(mean_a, mean_t)) << '\n';
      else if (cdf_cmd->parsed()) {
        a2r::theory::E1Method method = a2r::theory::E1Method::Auto;
        if (cdf_method == "series")
          method = a2r::theory::E1Method::Series;
        else if (cdf_method == "cf")
          method = a2r::theory::E1Method::ContinuedFraction;
        else if (cdf_method != "auto")
          throw CLI::ValidationError("--method must be auto|series|cf");
        std::cout << fmt_double(a2r::theory::cdf_Y2(cdf_a, method)) << '\n';
      } else if (ecv_cmd->parsed())
        std::cout << a2r::theory::expected_cyclic_vertices(ecv_seq.build()) << '\n';
      else if (ecc_cmd->parsed())
        std::cout << a2r::theory::expected_cycle_count(ecc_seq.build(), ecc_k) << '\n';
      else if (surv_cmd->parsed())
        std::cout << a2r::theory::line_survival(surv_seq.build(), surv_k) << '\n';
      else if (pred_cmd->parsed())
        std::cout << fmt_double(a2r::theory::lower_regime_prediction(pred_n, pred_n1)) << '\n';
      else if (table_cmd->parsed()) {
        std::ostream& out = table_out.open();
        out << "a,value\n";
        for (unsigned i = 0; i < table_steps; ++i) {
          const double frac =
              table_steps == 1 ? 0.0 : static_cast<double>(i) / (table_steps - 1);
          const double a = table_log
                               ? table_min * std::pow(table_max / table_min, frac)
                               : table_min + (table_max - table_min) * frac;
          const double v = table_what == "lambda" ? a2r::theory::lambda_intensity(a)
                                                  : a2r::theory::cdf_Y2(a);
          out << fmt_double(a) << ',' << fmt_double(v) << '\n';
        }
      }
      return 0;
    }
    if (exp_cmd->parsed()) return cmd_experiment(exp_config, exp_seed, exp_out_dir, exp_workers);
    if (report_cmd->parsed()) return cmd_report(report_result, report_out_dir);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const a2r::error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
