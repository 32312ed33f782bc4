#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "a2r/multigraph.hpp"

namespace a2r {

enum class Topology : std::uint8_t { Cycle, Line, Complex };

const char* topology_name(Topology t) noexcept;

// Full component decomposition of a multigraph.
//
//   Cycle   — every vertex has degree 2 and #edges == #vertices
//             (self-loop = 1-cycle, double edge = 2-cycle)
//   Line    — exactly two degree-1 endpoints, all others degree 2
//   Complex — anything else (contains a vertex of degree >= 3)
struct ComponentReport {
  std::uint64_t n = 0;
  std::vector<std::uint64_t> sizes_desc;  // component sizes, descending
  std::vector<Topology> topo;             // classes aligned with sizes_desc
  std::uint64_t cyclic_vertices = 0;      // C(n): vertices in Cycle components
  std::map<std::uint64_t, std::uint64_t> cycle_hist;  // k -> C_n(k)
  std::vector<std::uint64_t> line_sizes_desc;
  std::uint64_t largest_cycle = 0;        // |C_max^Cycle|, 0 when no cycles
  std::uint64_t non2_outside_giant = 0;   // degree-!=2 vertices outside C_max
};

// Iterative traversal over the half-edge involution (lines can be
// Theta(n) long, so no recursion). Ties for the largest component break
// towards the earliest-discovered one.
ComponentReport analyze(const MultiGraph& g);

// Component label per vertex (labels are discovery-ordered, 0-based).
std::vector<std::uint64_t> component_labels(const MultiGraph& g);

// n - |C_max|.
std::uint64_t deficiency(const ComponentReport& report);

// S_n^{(a)}(t n2/lne2): number of Cycle components with size k in
// [ceil(a n2/lne2), floor(t n2/lne2)]. The bounds are evaluated exactly
// over the rationals, with a and t entering as their exact IEEE-754
// values, so the window is bit-reproducible.
std::uint64_t s_process(const ComponentReport& report, const DegreeSequence& seq,
                        double a, double t);

}  // namespace a2r
