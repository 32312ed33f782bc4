#include "a2r/exploration.hpp"

#include <algorithm>
#include <queue>
#include <string>
#include <vector>

#include "a2r/errors.hpp"

namespace a2r {

namespace {

enum : std::uint8_t { kNeutral = 0, kActive = 1, kDead = 2 };

ExplorationOutcome decide(const std::optional<std::uint64_t>& t_ne2,
                          const std::optional<std::uint64_t>& t_cycle, bool capped) {
  if (t_cycle && (!t_ne2 || *t_cycle < *t_ne2)) return ExplorationOutcome::ClosedCycle;
  if (t_ne2) return ExplorationOutcome::HitNonTwo;
  return capped ? ExplorationOutcome::CapReached : ExplorationOutcome::Exhausted;
}

}  // namespace

const char* outcome_name(ExplorationOutcome o) noexcept {
  switch (o) {
    case ExplorationOutcome::HitNonTwo: return "HitNonTwo";
    case ExplorationOutcome::ClosedCycle: return "ClosedCycle";
    case ExplorationOutcome::Exhausted: return "Exhausted";
    case ExplorationOutcome::CapReached: return "CapReached";
  }
  return "?";
}

ExplorationTrace explore(const MultiGraph& g, std::uint64_t start) {
  const DegreeSequence& seq = g.seq();
  if (start >= seq.n())
    throw_error(errc::out_of_range, "start vertex " + std::to_string(start));

  ExplorationTrace trace;
  trace.start = start;
  trace.component_size = 1;

  std::vector<std::uint8_t> status(seq.ell(), kNeutral);
  std::priority_queue<std::uint64_t, std::vector<std::uint64_t>, std::greater<>> active;
  std::uint64_t active_count = 0;  // the heap keeps stale entries

  const std::uint64_t begin = seq.half_edge_begin(start);
  for (std::uint32_t s = 0; s < seq.degree_of(start); ++s) {
    status[begin + s] = kActive;
    active.push(begin + s);
    ++active_count;
  }
  trace.max_active = active_count;

  while (!active.empty()) {
    const std::uint64_t e1 = active.top();
    active.pop();
    if (status[e1] != kActive) continue;  // lazily discarded
    status[e1] = kDead;
    --active_count;

    const std::uint64_t e2 = g.partner(static_cast<std::uint32_t>(e1));
    ++trace.steps;
    if (status[e2] == kActive) {
      status[e2] = kDead;
      --active_count;
      if (!trace.t_cycle) trace.t_cycle = trace.steps;
    } else {
      // Neutral partner: its vertex is fresh (a discovered vertex has no
      // neutral half-edges left).
      status[e2] = kDead;
      const auto [v2, slot2] = seq.locate(e2);
      const std::uint32_t d2 = seq.degree_of(v2);
      if (d2 != 2 && !trace.t_ne2) trace.t_ne2 = trace.steps;
      ++trace.component_size;
      const std::uint64_t vbegin = seq.half_edge_begin(v2);
      for (std::uint32_t s = 0; s < d2; ++s) {
        const std::uint64_t h = vbegin + s;
        if (status[h] == kNeutral) {
          status[h] = kActive;
          active.push(h);
          ++active_count;
        }
      }
    }
    trace.max_active = std::max(trace.max_active, active_count);
  }
  trace.outcome = decide(trace.t_ne2, trace.t_cycle, false);
  return trace;
}

ExplorationTrace explore_lazy(const DegreeSequence& seq, std::uint64_t start,
                              std::uint64_t seed, std::uint64_t cap) {
  if (start >= seq.n())
    throw_error(errc::out_of_range, "start vertex " + std::to_string(start));
  if (cap < 1) throw_error(errc::out_of_range, "cap must be >= 1");

  rng::Xoshiro256StarStar gen(seed);

  // Undiscovered-vertex count per degree class; all half-edges of an
  // undiscovered vertex are neutral, so the class sizes determine the
  // partner distribution (same-class half-edges are exchangeable).
  std::vector<std::pair<std::uint32_t, std::uint64_t>> fresh = seq.degree_counts();
  const std::uint32_t start_degree = seq.degree_of(start);
  for (auto& [degree, count] : fresh)
    if (degree == start_degree) --count;

  std::uint64_t neutral = seq.ell() - start_degree;
  std::uint64_t active = start_degree;

  ExplorationTrace trace;
  trace.start = start;
  trace.component_size = 1;
  trace.max_active = active;
  bool capped = false;

  while (active > 0) {
    if (trace.steps == cap) {
      capped = true;
      break;
    }
    ++trace.steps;
    --active;  // e1 leaves the pool
    const std::uint64_t pool = active + neutral;
    const std::uint64_t r = gen.bounded(pool);
    if (r < active) {
      --active;
      if (!trace.t_cycle) trace.t_cycle = trace.steps;
    } else {
      // Neutral pick: choose the degree class proportionally to its
      // remaining half-edges, then discover one fresh vertex of it.
      std::uint64_t x = r - active;
      for (auto& [degree, count] : fresh) {
        const std::uint64_t weight = static_cast<std::uint64_t>(degree) * count;
        if (x < weight) {
          --count;
          neutral -= degree;
          active += degree - 1;
          ++trace.component_size;
          if (degree != 2 && !trace.t_ne2) trace.t_ne2 = trace.steps;
          break;
        }
        x -= weight;
      }
    }
    trace.max_active = std::max(trace.max_active, active);
  }
  trace.outcome = decide(trace.t_ne2, trace.t_cycle, capped);
  return trace;
}

ExplorationTrace explore_lazy(const DegreeSequence& seq, std::uint64_t start,
                              std::uint64_t seed) {
  return explore_lazy(seq, start, seed, seq.n());
}

std::uint64_t uniform_vertex_of_degree(const DegreeSequence& seq, std::uint32_t degree,
                                       rng::Xoshiro256StarStar& gen) {
  const std::uint64_t count = seq.count(degree);
  if (count == 0)
    throw_error(errc::out_of_range, "no vertices of degree " + std::to_string(degree));
  return seq.nth_vertex_of_degree(degree, gen.bounded(count));
}

}  // namespace a2r
