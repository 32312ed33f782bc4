#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "a2r/components.hpp"
#include "a2r/exploration.hpp"
#include "a2r/kernel.hpp"
#include "a2r/multigraph.hpp"

namespace a2r::io {

using json = nlohmann::json;

// Edge list, one "u v" line per edge (vertex ids). Lossy: slots dropped.
void write_edge_list(std::ostream& out, const MultiGraph& g);

// Half-edge-resolved list, one "u:slot v:slot" line per edge. Bit-exact
// round-trips through read_half_edge_list.
void write_half_edge_list(std::ostream& out, const MultiGraph& g);
MultiGraph read_half_edge_list(std::istream& in);

// DOT export for small graphs.
void write_dot(std::ostream& out, const MultiGraph& g);

// Kernel back-map sidecar, one "kernel_id original_id" line per vertex.
void write_back_map(std::ostream& out, const KernelGraph& k);

// ComponentReport serializations; field names match the struct.
json report_to_json(const ComponentReport& report);
void write_report_kv(std::ostream& out, const ComponentReport& report);

json trace_to_json(const ExplorationTrace& trace);

}  // namespace a2r::io
