#include "a2r/io.hpp"

#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "a2r/errors.hpp"

namespace a2r::io {

void write_edge_list(std::ostream& out, const MultiGraph& g) {
  for (const auto& [a, b] : g.half_edge_pairs())
    out << a.vertex << ' ' << b.vertex << '\n';
}

void write_half_edge_list(std::ostream& out, const MultiGraph& g) {
  for (const auto& [a, b] : g.half_edge_pairs())
    out << a.vertex << ':' << a.slot << ' ' << b.vertex << ':' << b.slot << '\n';
}

MultiGraph read_half_edge_list(std::istream& in) {
  struct Endpoint {
    std::uint64_t vertex;
    std::uint32_t slot;
  };
  std::vector<std::pair<Endpoint, Endpoint>> raw;
  std::map<std::uint64_t, std::uint32_t> degree;  // vertex -> #half-edges seen
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    Endpoint a{}, b{};
    char c1 = 0, c2 = 0;
    std::istringstream ss(line);
    if (!(ss >> a.vertex >> c1 >> a.slot >> b.vertex >> c2 >> b.slot) || c1 != ':' ||
        c2 != ':')
      throw_error(errc::io_error, "line " + std::to_string(line_no) +
                                      ": expected 'u:slot v:slot', got '" + line + "'");
    ++degree[a.vertex];
    ++degree[b.vertex];
    raw.push_back({a, b});
  }
  if (!degree.empty() && degree.rbegin()->first + 1 != degree.size())
    throw_error(errc::io_error, "vertex ids are not contiguous from 0");

  std::vector<std::uint32_t> degrees(degree.size());
  for (const auto& [v, d] : degree) degrees[v] = d;
  DegreeSequence seq = DegreeSequence::from_degrees(degrees);

  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
  pairs.reserve(raw.size());
  for (const auto& [a, b] : raw) {
    if (a.slot >= seq.degree_of(a.vertex) || b.slot >= seq.degree_of(b.vertex))
      throw_error(errc::io_error, "slot out of range");
    pairs.emplace_back(
        static_cast<std::uint32_t>(seq.half_edge_begin(a.vertex) + a.slot),
        static_cast<std::uint32_t>(seq.half_edge_begin(b.vertex) + b.slot));
  }
  return MultiGraph::from_pairs(std::move(seq), pairs);
}

void write_dot(std::ostream& out, const MultiGraph& g) {
  out << "graph configuration {\n";
  for (std::uint64_t v = 0; v < g.n(); ++v) out << "  " << v << ";\n";
  for (const auto& [a, b] : g.half_edge_pairs())
    out << "  " << a.vertex << " -- " << b.vertex << ";\n";
  out << "}\n";
}

void write_back_map(std::ostream& out, const KernelGraph& k) {
  for (std::uint64_t kid = 0; kid < k.back_map.size(); ++kid)
    out << kid << ' ' << k.back_map[kid] << '\n';
}

json report_to_json(const ComponentReport& report) {
  json j;
  j["sizes_desc"] = report.sizes_desc;
  json topo = json::array();
  for (const Topology t : report.topo) topo.push_back(topology_name(t));
  j["topo"] = std::move(topo);
  j["cyclic_vertices"] = report.cyclic_vertices;
  json hist = json::object();
  for (const auto& [k, c] : report.cycle_hist) hist[std::to_string(k)] = c;
  j["cycle_hist"] = std::move(hist);
  j["line_sizes_desc"] = report.line_sizes_desc;
  j["largest_cycle"] = report.largest_cycle;
  j["non2_outside_giant"] = report.non2_outside_giant;
  return j;
}

void write_report_kv(std::ostream& out, const ComponentReport& report) {
  auto write_list = [&out](const char* key, const std::vector<std::uint64_t>& xs) {
    out << key << ' ';
    for (std::size_t i = 0; i < xs.size(); ++i) out << (i ? "," : "") << xs[i];
    out << '\n';
  };
  write_list("sizes_desc", report.sizes_desc);
  out << "topo ";
  for (std::size_t i = 0; i < report.topo.size(); ++i)
    out << (i ? "," : "") << topology_name(report.topo[i]);
  out << '\n';
  out << "cyclic_vertices " << report.cyclic_vertices << '\n';
  out << "cycle_hist ";
  bool sep = false;
  for (const auto& [k, c] : report.cycle_hist) {
    out << (sep ? "," : "") << k << ':' << c;
    sep = true;
  }
  out << '\n';
  write_list("line_sizes_desc", report.line_sizes_desc);
  out << "largest_cycle " << report.largest_cycle << '\n';
  out << "non2_outside_giant " << report.non2_outside_giant << '\n';
}

json trace_to_json(const ExplorationTrace& trace) {
  json j;
  j["start"] = trace.start;
  j["steps"] = trace.steps;
  j["t_ne2"] = trace.t_ne2 ? json(*trace.t_ne2) : json(nullptr);
  j["t_cycle"] = trace.t_cycle ? json(*trace.t_cycle) : json(nullptr);
  j["outcome"] = outcome_name(trace.outcome);
  j["component_size"] = trace.component_size;
  j["max_active"] = trace.max_active;
  return j;
}

}  // namespace a2r::io
