#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "a2r/degree_sequence.hpp"

namespace a2r {

// Half-edge as (vertex, slot), slot in [0, d_vertex).
struct HalfEdge {
  std::uint64_t vertex;
  std::uint32_t slot;
};

inline bool operator==(const HalfEdge& a, const HalfEdge& b) {
  return a.vertex == b.vertex && a.slot == b.slot;
}

// Perfect matching of the half-edge set: a configuration-model multigraph.
// Self-loops and multi-edges are allowed. Internally the matching is the
// involution h -> partner(h) on half-edge ids [0, ell).
class MultiGraph {
 public:
  MultiGraph(DegreeSequence seq, std::vector<std::uint32_t> partner);

  // Builds from explicit half-edge id pairs (each id exactly once).
  static MultiGraph from_pairs(DegreeSequence seq,
                               const std::vector<std::pair<std::uint32_t, std::uint32_t>>& pairs);

  const DegreeSequence& seq() const { return seq_; }
  std::uint64_t n() const { return seq_.n(); }
  std::uint64_t ell() const { return seq_.ell(); }
  std::uint64_t pair_count() const { return seq_.ell() / 2; }

  std::uint32_t partner(std::uint32_t h) const { return partner_[h]; }
  const std::vector<std::uint32_t>& partners() const { return partner_; }

  // Pairs in canonical order: (h, partner(h)) for h < partner(h),
  // ascending in h. Self-loop = both half-edges on one vertex.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs() const;

  // Same pairs resolved to (vertex, slot) endpoints.
  std::vector<std::pair<HalfEdge, HalfEdge>> half_edge_pairs() const;

  // Compact canonical encoding of the matching, usable as a map key when
  // binning enumeration outcomes.
  std::string canonical_key() const;

 private:
  DegreeSequence seq_;
  std::vector<std::uint32_t> partner_;
};

}  // namespace a2r
