#include "a2r/degree_sequence.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <sstream>
#include <string>

#include "a2r/errors.hpp"

namespace a2r {

DegreeSequence DegreeSequence::from_runs(std::vector<DegreeRun> runs) {
  DegreeSequence seq;
  std::uint64_t v = 0;
  std::uint64_t h = 0;
  for (auto& run : runs) {
    if (run.count == 0) continue;
    if (run.degree == 0)
      throw_error(errc::invalid_degree, "degree-0 vertices are excluded");
    run.first_vertex = v;
    run.first_half_edge = h;
    v += run.count;
    h += static_cast<std::uint64_t>(run.degree) * run.count;
    seq.counts_[run.degree] += run.count;
    if (run.degree != 2)
      seq.ell_ne2_ += static_cast<std::uint64_t>(run.degree) * run.count;
    seq.runs_.push_back(run);
  }
  seq.n_ = v;
  seq.ell_ = h;
  if (seq.ell_ % 2 != 0)
    throw_error(errc::odd_total_degree,
                "total degree " + std::to_string(seq.ell_) + " is odd");
  // ell even forces ell_ne2 even (ell_ne2 = ell - 2 n2).
  if (seq.ell_ne2_ % 2 != 0)
    throw_error(errc::odd_total_degree, "ell_ne2 is odd");
  return seq;
}

DegreeSequence DegreeSequence::from_degrees(const std::vector<std::uint32_t>& degrees) {
  std::vector<DegreeRun> runs;
  for (std::uint32_t d : degrees) {
    if (!runs.empty() && runs.back().degree == d)
      ++runs.back().count;
    else
      runs.push_back(DegreeRun{0, 0, 1, d});
  }
  return from_runs(std::move(runs));
}

DegreeSequence DegreeSequence::build_upper(std::uint64_t n2,
                                           const std::map<std::uint32_t, std::uint64_t>& higher) {
  std::vector<DegreeRun> runs;
  runs.push_back(DegreeRun{0, 0, n2, 2});
  for (const auto& [degree, count] : higher) {
    if (degree < 3)
      throw_error(errc::invalid_degree,
                  "build_upper requires degrees >= 3, got " + std::to_string(degree));
    runs.push_back(DegreeRun{0, 0, count, degree});
  }
  return from_runs(std::move(runs));
}

DegreeSequence DegreeSequence::build_lower(std::uint64_t n2, std::uint64_t n1) {
  std::vector<DegreeRun> runs;
  runs.push_back(DegreeRun{0, 0, n2, 2});
  runs.push_back(DegreeRun{0, 0, n1, 1});
  return from_runs(std::move(runs));
}

DegreeSequence DegreeSequence::load(std::istream& in) {
  std::vector<std::uint32_t> degrees;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::uint64_t d = 0;
    try {
      std::size_t used = 0;
      d = std::stoull(line.substr(first), &used);
    } catch (const std::exception&) {
      throw_error(errc::io_error,
                  "line " + std::to_string(line_no) + ": not a degree: '" + line + "'");
    }
    if (d == 0 || d > 0xFFFFFFFFULL)
      throw_error(errc::invalid_degree,
                  "line " + std::to_string(line_no) + ": degree " + std::to_string(d));
    degrees.push_back(static_cast<std::uint32_t>(d));
  }
  return from_degrees(degrees);
}

DegreeSequence DegreeSequence::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw_error(errc::io_error, "cannot open " + path);
  return load(in);
}

std::uint64_t DegreeSequence::count(std::uint32_t degree) const {
  auto it = counts_.find(degree);
  return it == counts_.end() ? 0 : it->second;
}

std::uint32_t DegreeSequence::max_degree() const {
  return counts_.empty() ? 0 : counts_.rbegin()->first;
}

std::uint32_t DegreeSequence::degree_of(std::uint64_t v) const {
  if (v >= n_) throw_error(errc::out_of_range, "vertex " + std::to_string(v));
  auto it = std::upper_bound(runs_.begin(), runs_.end(), v,
                             [](std::uint64_t x, const DegreeRun& r) { return x < r.first_vertex; });
  return std::prev(it)->degree;
}

std::uint64_t DegreeSequence::half_edge_begin(std::uint64_t v) const {
  if (v >= n_) throw_error(errc::out_of_range, "vertex " + std::to_string(v));
  auto it = std::upper_bound(runs_.begin(), runs_.end(), v,
                             [](std::uint64_t x, const DegreeRun& r) { return x < r.first_vertex; });
  const DegreeRun& run = *std::prev(it);
  return run.first_half_edge + (v - run.first_vertex) * run.degree;
}

std::uint64_t DegreeSequence::vertex_of_half_edge(std::uint64_t h) const {
  return locate(h).first;
}

std::pair<std::uint64_t, std::uint32_t> DegreeSequence::locate(std::uint64_t h) const {
  if (h >= ell_) throw_error(errc::out_of_range, "half-edge " + std::to_string(h));
  auto it = std::upper_bound(runs_.begin(), runs_.end(), h,
                             [](std::uint64_t x, const DegreeRun& r) { return x < r.first_half_edge; });
  const DegreeRun& run = *std::prev(it);
  const std::uint64_t offset = h - run.first_half_edge;
  return {run.first_vertex + offset / run.degree,
          static_cast<std::uint32_t>(offset % run.degree)};
}

std::vector<std::pair<std::uint32_t, std::uint64_t>> DegreeSequence::degree_counts() const {
  return {counts_.begin(), counts_.end()};
}

std::uint64_t DegreeSequence::nth_vertex_of_degree(std::uint32_t degree,
                                                   std::uint64_t index) const {
  std::uint64_t skipped = 0;
  for (const auto& run : runs_) {
    if (run.degree != degree) continue;
    if (index < skipped + run.count) return run.first_vertex + (index - skipped);
    skipped += run.count;
  }
  throw_error(errc::out_of_range, "no vertex #" + std::to_string(index) +
                                      " of degree " + std::to_string(degree));
}

const char* regime_name(Regime r) noexcept {
  switch (r) {
    case Regime::UpperCandidate: return "UpperCandidate";
    case Regime::LowerCandidate: return "LowerCandidate";
    case Regime::Mixed: return "Mixed";
    case Regime::PureTwoRegular: return "PureTwoRegular";
  }
  return "?";
}

RegimeDiagnostics diagnose(const DegreeSequence& seq) {
  const std::uint64_t n1 = seq.count(1);
  const bool has_higher = seq.max_degree() > 2;
  Regime regime;
  if (n1 == 0 && !has_higher)
    regime = Regime::PureTwoRegular;
  else if (n1 == 0 && seq.ell_ne2() > 0)
    regime = Regime::UpperCandidate;
  else if (n1 > 0 && !has_higher)
    regime = Regime::LowerCandidate;
  else
    regime = Regime::Mixed;
  const double n = seq.n() > 0 ? static_cast<double>(seq.n()) : 1.0;
  return RegimeDiagnostics{regime, static_cast<double>(seq.ell()) / n,
                           static_cast<double>(seq.ell_ne2()) / n};
}

const char* errc_name(errc code) noexcept {
  switch (code) {
    case errc::odd_total_degree: return "OddTotalDegree";
    case errc::invalid_degree: return "InvalidDegree";
    case errc::too_large: return "TooLarge";
    case errc::no_kernel_half_edges: return "NoKernelHalfEdges";
    case errc::non_positive_argument: return "NonPositiveArgument";
    case errc::bad_interval: return "BadInterval";
    case errc::out_of_range: return "OutOfRange";
    case errc::empty_sample: return "EmptySample";
    case errc::bad_config: return "BadConfig";
    case errc::io_error: return "IoError";
  }
  return "?";
}

}  // namespace a2r
