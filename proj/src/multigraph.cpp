#include "a2r/multigraph.hpp"

#include <string>

#include "a2r/errors.hpp"

namespace a2r {

MultiGraph::MultiGraph(DegreeSequence seq, std::vector<std::uint32_t> partner)
    : seq_(std::move(seq)), partner_(std::move(partner)) {
  if (seq_.ell() > 0xFFFFFFFFull)
    throw_error(errc::too_large, "materialized graphs support at most 2^32 half-edges");
  if (partner_.size() != seq_.ell())
    throw_error(errc::bad_config, "partner array size != ell");
  for (std::uint64_t h = 0; h < partner_.size(); ++h) {
    const std::uint32_t p = partner_[h];
    if (p >= partner_.size() || p == h || partner_[p] != h)
      throw_error(errc::bad_config, "not an involution at half-edge " + std::to_string(h));
  }
}

MultiGraph MultiGraph::from_pairs(
    DegreeSequence seq, const std::vector<std::pair<std::uint32_t, std::uint32_t>>& pairs) {
  const std::uint64_t ell = seq.ell();
  if (pairs.size() * 2 != ell)
    throw_error(errc::bad_config, "pair count != ell/2");
  constexpr std::uint32_t kUnset = 0xFFFFFFFFu;
  std::vector<std::uint32_t> partner(ell, kUnset);
  for (const auto& [a, b] : pairs) {
    if (a >= ell || b >= ell || a == b || partner[a] != kUnset || partner[b] != kUnset)
      throw_error(errc::bad_config, "invalid pair (" + std::to_string(a) + "," +
                                        std::to_string(b) + ")");
    partner[a] = b;
    partner[b] = a;
  }
  return MultiGraph(std::move(seq), std::move(partner));
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> MultiGraph::pairs() const {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
  out.reserve(pair_count());
  for (std::uint32_t h = 0; h < partner_.size(); ++h)
    if (h < partner_[h]) out.emplace_back(h, partner_[h]);
  return out;
}

std::vector<std::pair<HalfEdge, HalfEdge>> MultiGraph::half_edge_pairs() const {
  std::vector<std::pair<HalfEdge, HalfEdge>> out;
  out.reserve(pair_count());
  for (const auto& [a, b] : pairs()) {
    const auto [va, sa] = seq_.locate(a);
    const auto [vb, sb] = seq_.locate(b);
    out.push_back({HalfEdge{va, sa}, HalfEdge{vb, sb}});
  }
  return out;
}

std::string MultiGraph::canonical_key() const {
  std::string key;
  key.reserve(partner_.size() * 4);
  for (const std::uint32_t p : partner_) {
    key.push_back(static_cast<char>(p & 0xFF));
    key.push_back(static_cast<char>((p >> 8) & 0xFF));
    key.push_back(static_cast<char>((p >> 16) & 0xFF));
    key.push_back(static_cast<char>((p >> 24) & 0xFF));
  }
  return key;
}

}  // namespace a2r
