#include "a2r/sampler.hpp"

#include <numeric>
#include <string>

#include "a2r/errors.hpp"
#include "a2r/rng.hpp"

namespace a2r {

namespace {
constexpr std::uint32_t kUnmatched = 0xFFFFFFFFu;
}

MultiGraph sample(const DegreeSequence& seq, std::uint64_t seed) {
  const std::uint64_t ell = seq.ell();
  if (ell % 2 != 0) throw_error(errc::odd_total_degree, "ell is odd");
  if (ell > 0xFFFFFFFFull)
    throw_error(errc::too_large, "materialized graphs support at most 2^32 half-edges");

  rng::Xoshiro256StarStar gen(seed);
  std::vector<std::uint32_t> partner(ell, kUnmatched);
  std::vector<std::uint32_t> pool(ell);
  std::vector<std::uint32_t> pos(ell);
  std::iota(pool.begin(), pool.end(), 0u);
  std::iota(pos.begin(), pos.end(), 0u);
  std::uint32_t size = static_cast<std::uint32_t>(ell);

  auto remove = [&](std::uint32_t h) {
    const std::uint32_t idx = pos[h];
    const std::uint32_t last = pool[--size];
    pool[idx] = last;
    pos[last] = idx;
  };

  for (std::uint32_t h = 0; h < ell; ++h) {
    if (partner[h] != kUnmatched) continue;
    remove(h);
    const std::uint32_t p = pool[gen.bounded(size)];
    remove(p);
    partner[h] = p;
    partner[p] = h;
  }
  return MultiGraph(seq, std::move(partner));
}

BigInt matching_count(std::uint64_t ell) {
  if (ell % 2 != 0) throw_error(errc::odd_total_degree, "ell is odd");
  BigInt result = 1;
  for (std::uint64_t k = 1; k + 1 <= ell; k += 2) result *= (ell - k);
  return result;
}

MatchingEnumerator::MatchingEnumerator(const DegreeSequence& seq) : seq_(seq) {
  const std::uint64_t ell = seq.ell();
  if (ell % 2 != 0) throw_error(errc::odd_total_degree, "ell is odd");
  if (ell > kEnumerationMaxHalfEdges)
    throw_error(errc::too_large, "enumeration supports ell <= " +
                                     std::to_string(kEnumerationMaxHalfEdges) + ", got " +
                                     std::to_string(ell));
  partner_.assign(ell, kUnmatched);
}

// Completes the partial matching on the stack by always pairing the
// smallest unmatched half-edge with its smallest unmatched candidate.
bool MatchingEnumerator::extend() {
  const std::uint32_t ell = static_cast<std::uint32_t>(partner_.size());
  for (std::uint32_t h = 0; h < ell; ++h) {
    if (partner_[h] != kUnmatched) continue;
    std::uint32_t p = kUnmatched;
    for (std::uint32_t c = h + 1; c < ell; ++c)
      if (partner_[c] == kUnmatched) {
        p = c;
        break;
      }
    if (p == kUnmatched) return false;  // odd leftover; cannot happen, ell even
    partner_[h] = p;
    partner_[p] = h;
    stack_.emplace_back(h, p);
  }
  return true;
}

// Backtracks to the deepest level with a larger candidate and advances it.
bool MatchingEnumerator::advance() {
  const std::uint32_t ell = static_cast<std::uint32_t>(partner_.size());
  while (!stack_.empty()) {
    auto [h, p] = stack_.back();
    stack_.pop_back();
    partner_[h] = kUnmatched;
    partner_[p] = kUnmatched;
    for (std::uint32_t c = p + 1; c < ell; ++c) {
      if (partner_[c] != kUnmatched) continue;
      partner_[h] = c;
      partner_[c] = h;
      stack_.emplace_back(h, c);
      return true;
    }
  }
  return false;
}

std::optional<MultiGraph> MatchingEnumerator::next() {
  if (done_) return std::nullopt;
  if (partner_.empty()) {  // ell == 0: exactly one (empty) matching
    done_ = true;
    return MultiGraph(seq_, {});
  }
  if (!started_) {
    started_ = true;
    extend();
    return MultiGraph(seq_, partner_);
  }
  if (!advance()) {
    done_ = true;
    return std::nullopt;
  }
  extend();
  return MultiGraph(seq_, partner_);
}

}  // namespace a2r
