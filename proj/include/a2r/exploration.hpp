#pragma once

#include <cstdint>
#include <optional>

#include "a2r/multigraph.hpp"
#include "a2r/rng.hpp"

namespace a2r {

// How a trace ended:
//   HitNonTwo  — the first decisive event was pairing into a neutral
//                half-edge of a degree-!=2 vertex (T_ne2 < T_C)
//   ClosedCycle— the first decisive event paired two active half-edges
//                (T_C < T_ne2)
//   Exhausted  — the active set emptied with neither event (not reachable
//                on a full exploration of a valid matching; kept for
//                totality)
//   CapReached — lazy mode stopped at the step cap with the walk alive
//                and no event yet
enum class ExplorationOutcome : std::uint8_t { HitNonTwo, ClosedCycle, Exhausted, CapReached };

const char* outcome_name(ExplorationOutcome o) noexcept;

struct ExplorationTrace {
  std::uint64_t start = 0;
  std::uint64_t steps = 0;                 // pairing steps executed
  std::optional<std::uint64_t> t_ne2;      // T_ne2 (1-based step), if reached
  std::optional<std::uint64_t> t_cycle;    // T_C, if reached
  ExplorationOutcome outcome = ExplorationOutcome::Exhausted;
  std::uint64_t component_size = 0;        // vertices discovered (incl. start)
  std::uint64_t max_active = 0;            // peak |A_t|; stays <= 2 on degree-<=2 chains
};

// Active/dead/neutral exploration on a materialized graph, run until the
// active set empties; pairings are read from g, so component_size equals
// |C(start)|. The next active half-edge is always the smallest-id one
// (deterministic; the stopping-time *distribution* over the uniform
// matching does not depend on this rule).
//
// T_ne2 counts only pairings into *neutral* L_ne2 half-edges. For the
// paper's start regimes (degree 1 and 2) this coincides with the literal
// "e2 in L_ne2" definition; see the docs for the degree->=3-start corner.
ExplorationTrace explore(const MultiGraph& g, std::uint64_t start);

// Same process with the matching revealed on demand: the partner of each
// step is drawn uniformly among the not-yet-matched half-edges, tracked
// only through per-degree-class counters plus the active count. O(steps)
// time, O(#degree classes) memory. Statistically identical to sampling a
// full graph and exploring, for all events measurable from the trace.
ExplorationTrace explore_lazy(const DegreeSequence& seq, std::uint64_t start,
                              std::uint64_t seed, std::uint64_t cap);

// Cap defaults to n (no infinite loops even under bugs).
ExplorationTrace explore_lazy(const DegreeSequence& seq, std::uint64_t start,
                              std::uint64_t seed);

// Helper for the Definition's "arbitrary rule": uniform start vertex of a
// given degree class.
std::uint64_t uniform_vertex_of_degree(const DegreeSequence& seq, std::uint32_t degree,
                                       rng::Xoshiro256StarStar& gen);

}  // namespace a2r
