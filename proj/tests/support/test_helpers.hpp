#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "a2r/multigraph.hpp"
#include "a2r/sampler.hpp"

namespace a2r_test {

// All matchings of a small sequence, materialized.
inline std::vector<a2r::MultiGraph> all_matchings(const a2r::DegreeSequence& seq) {
  std::vector<a2r::MultiGraph> out;
  a2r::MatchingEnumerator en(seq);
  while (auto g = en.next()) out.push_back(std::move(*g));
  return out;
}

// Reference kernel contraction: the literal one-vertex-at-a-time removal
// algorithm, parameterized by removal order. Kept brute-force and
// independent of the production chain-walking implementation.
//
// State: the matching on original half-edges, with removed vertices'
// half-edges absent. Removing degree-2 vertex v: if its two half-edges
// pair each other (self-loop), drop them; else splice v's two neighbor
// half-edges into a direct pair.
struct LiteralKernel {
  std::map<std::uint64_t, std::uint64_t> partner;  // surviving half-edges
  std::uint64_t dropped_cycles = 0;
};

inline LiteralKernel literal_contract(const a2r::MultiGraph& g, bool ascending) {
  const a2r::DegreeSequence& seq = g.seq();
  LiteralKernel result;
  for (std::uint64_t h = 0; h < seq.ell(); ++h) result.partner[h] = g.partner(h);

  std::vector<std::uint64_t> order;
  for (std::uint64_t v = 0; v < seq.n(); ++v)
    if (seq.degree_of(v) == 2) order.push_back(v);
  if (!ascending) std::reverse(order.begin(), order.end());

  for (const std::uint64_t v : order) {
    const std::uint64_t h0 = seq.half_edge_begin(v);
    const std::uint64_t h1 = h0 + 1;
    const std::uint64_t p0 = result.partner.at(h0);
    const std::uint64_t p1 = result.partner.at(h1);
    result.partner.erase(h0);
    result.partner.erase(h1);
    if (p0 == h1) {  // self-loop at v
      ++result.dropped_cycles;
      continue;
    }
    result.partner[p0] = p1;
    result.partner[p1] = p0;
  }
  return result;
}

}  // namespace a2r_test
