#pragma once

#include <cstdint>
#include <optional>

#include <boost/multiprecision/cpp_int.hpp>

#include "a2r/multigraph.hpp"

namespace a2r {

using BigInt = boost::multiprecision::cpp_int;

// Uniform perfect matching of the half-edge set; deterministic in
// (seq, seed). Pairing rule: repeatedly take the smallest unmatched
// half-edge and match it with a uniform draw from the remaining ones
// (index-swap on a compact array, O(ell) total).
MultiGraph sample(const DegreeSequence& seq, std::uint64_t seed);

// (ell-1)!! — the number of perfect matchings of ell labelled half-edges.
BigInt matching_count(std::uint64_t ell);

// Enumeration guard: 13!! = 135135 outcomes is tractable, 15!! is not
// needed by any test.
inline constexpr std::uint64_t kEnumerationMaxHalfEdges = 14;

// Streams every perfect matching exactly once, in canonical order: the
// smallest unmatched half-edge is paired with each larger unmatched
// candidate in ascending order, recursively.
class MatchingEnumerator {
 public:
  explicit MatchingEnumerator(const DegreeSequence& seq);

  std::optional<MultiGraph> next();

  const DegreeSequence& seq() const { return seq_; }
  BigInt total() const { return matching_count(seq_.ell()); }

 private:
  bool advance();
  bool extend();

  DegreeSequence seq_;
  std::vector<std::uint32_t> partner_;
  // Choice stack: the half-edges matched at each level, in pairing order.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> stack_;
  bool started_ = false;
  bool done_ = false;
};

}  // namespace a2r
