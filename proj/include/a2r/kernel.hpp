#pragma once

#include <cstdint>
#include <vector>

#include "a2r/multigraph.hpp"

namespace a2r {

// Result of contracting away all degree-2 vertices. Kernel vertices are
// the degree-!=2 vertices relabeled 0..n'-1 in ascending original id;
// their degrees are unchanged, so the kernel degree sequence d' has
// n'_2 = 0 and n'_i = n_i for i != 2.
struct KernelGraph {
  MultiGraph graph;
  std::vector<std::uint64_t> back_map;  // kernel id -> original vertex id
  std::uint64_t dropped_cycles = 0;     // pure degree-2 cycles erased
};

// Contraction via pointer-jumping along degree-2 chains (each chain is
// walked once, O(ell) total). Produces the same labelled matching on the
// degree-!=2 half-edges as the per-vertex removal algorithm under any
// removal order; a pure 2-regular input yields an empty kernel.
KernelGraph contract(const MultiGraph& g);

// True iff two degree-!=2 vertices are connected in g exactly when they
// are connected in contract(g).
bool kernel_edge_identity(const MultiGraph& g);

}  // namespace a2r
