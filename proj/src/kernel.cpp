#include "a2r/kernel.hpp"

#include <map>
#include <unordered_map>

#include "a2r/components.hpp"
#include "a2r/errors.hpp"

namespace a2r {

namespace {
constexpr std::uint32_t kUnset = 0xFFFFFFFFu;
}

KernelGraph contract(const MultiGraph& g) {
  const DegreeSequence& seq = g.seq();
  const std::uint64_t n = seq.n();

  // Kernel vertices: degree-!=2 vertices in ascending original id, with
  // their original degrees.
  std::vector<std::uint64_t> back_map;
  std::vector<std::uint32_t> kernel_degrees;
  back_map.reserve(n - seq.count(2));
  for (const auto& run : seq.runs()) {
    if (run.degree == 2) continue;
    for (std::uint64_t i = 0; i < run.count; ++i) {
      back_map.push_back(run.first_vertex + i);
      kernel_degrees.push_back(run.degree);
    }
  }
  DegreeSequence kernel_seq = DegreeSequence::from_degrees(kernel_degrees);

  // Kernel half-edge id <-> original half-edge id, over the L_ne2 set.
  std::vector<std::uint64_t> orig_of_kernel_he;
  orig_of_kernel_he.reserve(kernel_seq.ell());
  std::unordered_map<std::uint64_t, std::uint32_t> to_kernel_he;
  to_kernel_he.reserve(kernel_seq.ell());
  for (std::uint64_t k = 0; k < back_map.size(); ++k) {
    const std::uint64_t begin = seq.half_edge_begin(back_map[k]);
    const std::uint32_t d = kernel_seq.degree_of(k);
    for (std::uint32_t s = 0; s < d; ++s) {
      to_kernel_he.emplace(begin + s, static_cast<std::uint32_t>(orig_of_kernel_he.size()));
      orig_of_kernel_he.push_back(begin + s);
    }
  }

  // Walk the degree-2 chain leaving each kernel half-edge once; the chain
  // ends at the next L_ne2 half-edge, which becomes the kernel partner.
  std::vector<std::uint8_t> seen2(n, 0);  // degree-2 vertices absorbed or dropped
  std::vector<std::uint32_t> kernel_partner(kernel_seq.ell(), kUnset);
  for (std::uint32_t kh = 0; kh < orig_of_kernel_he.size(); ++kh) {
    if (kernel_partner[kh] != kUnset) continue;
    std::uint64_t cur = g.partner(static_cast<std::uint32_t>(orig_of_kernel_he[kh]));
    for (;;) {
      const auto [v, slot] = seq.locate(cur);
      if (seq.degree_of(v) != 2) break;
      seen2[v] = 1;
      const std::uint64_t sibling = seq.half_edge_begin(v) + (slot == 0 ? 1 : 0);
      cur = g.partner(static_cast<std::uint32_t>(sibling));
    }
    const std::uint32_t other = to_kernel_he.at(cur);
    kernel_partner[kh] = other;
    kernel_partner[other] = kh;
  }

  // Degree-2 vertices not absorbed into chains form pure cycles, which the
  // contraction erases; count them.
  std::uint64_t dropped = 0;
  for (const auto& run : seq.runs()) {
    if (run.degree != 2) continue;
    for (std::uint64_t i = 0; i < run.count; ++i) {
      const std::uint64_t v0 = run.first_vertex + i;
      if (seen2[v0]) continue;
      ++dropped;
      seen2[v0] = 1;
      std::uint64_t cur = g.partner(static_cast<std::uint32_t>(seq.half_edge_begin(v0)));
      for (;;) {
        const auto [v, slot] = seq.locate(cur);
        if (v == v0) break;
        seen2[v] = 1;
        const std::uint64_t sibling = seq.half_edge_begin(v) + (slot == 0 ? 1 : 0);
        cur = g.partner(static_cast<std::uint32_t>(sibling));
      }
    }
  }

  return KernelGraph{MultiGraph(std::move(kernel_seq), std::move(kernel_partner)),
                     std::move(back_map), dropped};
}

bool kernel_edge_identity(const MultiGraph& g) {
  const KernelGraph k = contract(g);
  if (k.back_map.empty()) return true;  // no degree-!=2 vertices: vacuous

  const std::vector<std::uint64_t> g_labels = component_labels(g);
  const std::vector<std::uint64_t> k_labels = component_labels(k.graph);

  // Connectivity is preserved iff original-component -> kernel-component is
  // a well-defined injection over the kernel vertices.
  std::map<std::uint64_t, std::uint64_t> fwd, rev;
  for (std::uint64_t kid = 0; kid < k.back_map.size(); ++kid) {
    const std::uint64_t gl = g_labels[k.back_map[kid]];
    const std::uint64_t kl = k_labels[kid];
    if (auto [it, inserted] = fwd.emplace(gl, kl); !inserted && it->second != kl)
      return false;
    if (auto [it, inserted] = rev.emplace(kl, gl); !inserted && it->second != gl)
      return false;
  }
  return true;
}

}  // namespace a2r
