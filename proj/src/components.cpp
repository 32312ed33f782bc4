#include "a2r/components.hpp"

#include <algorithm>
#include <numeric>

#include <boost/multiprecision/cpp_int.hpp>

#include "a2r/errors.hpp"

namespace a2r {

namespace {

struct Traversal {
  std::vector<std::uint64_t> comp_size;
  std::vector<std::uint64_t> comp_deg1;
  std::vector<std::uint64_t> comp_non2;
  std::vector<std::uint64_t> labels;  // per vertex, discovery-ordered
};

Traversal traverse(const MultiGraph& g) {
  const DegreeSequence& seq = g.seq();
  const std::uint64_t n = seq.n();
  const std::uint64_t ell = seq.ell();
  const auto& partner = g.partners();

  std::vector<std::uint32_t> he2v(ell);
  std::vector<std::uint32_t> he_start(n);
  std::vector<std::uint32_t> deg(n);
  for (const auto& run : seq.runs()) {
    std::uint64_t h = run.first_half_edge;
    for (std::uint64_t i = 0; i < run.count; ++i) {
      const std::uint64_t v = run.first_vertex + i;
      deg[v] = run.degree;
      he_start[v] = static_cast<std::uint32_t>(h);
      for (std::uint32_t s = 0; s < run.degree; ++s) he2v[h++] = static_cast<std::uint32_t>(v);
    }
  }

  Traversal t;
  t.labels.assign(n, ~std::uint64_t{0});
  std::vector<std::uint32_t> stack;
  for (std::uint64_t v0 = 0; v0 < n; ++v0) {
    if (t.labels[v0] != ~std::uint64_t{0}) continue;
    const std::uint64_t label = t.comp_size.size();
    std::uint64_t size = 0, deg1 = 0, non2 = 0;
    t.labels[v0] = label;
    stack.push_back(static_cast<std::uint32_t>(v0));
    while (!stack.empty()) {
      const std::uint32_t v = stack.back();
      stack.pop_back();
      ++size;
      if (deg[v] == 1) ++deg1;
      if (deg[v] != 2) ++non2;
      const std::uint32_t begin = he_start[v];
      for (std::uint32_t h = begin; h < begin + deg[v]; ++h) {
        const std::uint32_t w = he2v[partner[h]];
        if (t.labels[w] == ~std::uint64_t{0}) {
          t.labels[w] = label;
          stack.push_back(w);
        }
      }
    }
    t.comp_size.push_back(size);
    t.comp_deg1.push_back(deg1);
    t.comp_non2.push_back(non2);
  }
  return t;
}

}  // namespace

const char* topology_name(Topology t) noexcept {
  switch (t) {
    case Topology::Cycle: return "Cycle";
    case Topology::Line: return "Line";
    case Topology::Complex: return "Complex";
  }
  return "?";
}

std::vector<std::uint64_t> component_labels(const MultiGraph& g) {
  return traverse(g).labels;
}

ComponentReport analyze(const MultiGraph& g) {
  const Traversal t = traverse(g);
  const std::uint64_t comps = t.comp_size.size();

  ComponentReport report;
  report.n = g.n();

  std::vector<Topology> topo(comps);
  for (std::uint64_t c = 0; c < comps; ++c) {
    if (t.comp_non2[c] == 0)
      topo[c] = Topology::Cycle;
    else if (t.comp_deg1[c] == 2 && t.comp_non2[c] == 2)
      topo[c] = Topology::Line;
    else
      topo[c] = Topology::Complex;
  }

  std::vector<std::uint64_t> order(comps);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::uint64_t a, std::uint64_t b) {
    return t.comp_size[a] > t.comp_size[b];
  });

  report.sizes_desc.reserve(comps);
  report.topo.reserve(comps);
  for (const std::uint64_t c : order) {
    report.sizes_desc.push_back(t.comp_size[c]);
    report.topo.push_back(topo[c]);
    if (topo[c] == Topology::Cycle) {
      report.cyclic_vertices += t.comp_size[c];
      ++report.cycle_hist[t.comp_size[c]];
      report.largest_cycle = std::max(report.largest_cycle, t.comp_size[c]);
    } else if (topo[c] == Topology::Line) {
      report.line_sizes_desc.push_back(t.comp_size[c]);
    }
  }

  if (comps > 0) {
    const std::uint64_t giant = order[0];
    std::uint64_t total_non2 = 0;
    for (std::uint64_t c = 0; c < comps; ++c) total_non2 += t.comp_non2[c];
    report.non2_outside_giant = total_non2 - t.comp_non2[giant];
  }
  return report;
}

std::uint64_t deficiency(const ComponentReport& report) {
  if (report.sizes_desc.empty())
    throw_error(errc::out_of_range, "empty graph has no largest component");
  return report.n - report.sizes_desc[0];
}

std::uint64_t s_process(const ComponentReport& report, const DegreeSequence& seq,
                        double a, double t) {
  using boost::multiprecision::cpp_int;
  using Rational = boost::multiprecision::cpp_rational;

  if (seq.ell_ne2() == 0)
    throw_error(errc::no_kernel_half_edges, "window scale n2/lne2 undefined for lne2 = 0");
  if (!(a > 0.0) || !(t >= a))
    throw_error(errc::bad_interval, "need 0 < a <= t");

  // k in [ceil(a n2/lne2), floor(t n2/lne2)], evaluated exactly; a and t
  // enter as their exact binary values.
  const Rational scale(cpp_int(seq.count(2)), cpp_int(seq.ell_ne2()));
  const Rational lo_r = Rational(a) * scale;
  const Rational hi_r = Rational(t) * scale;
  const cpp_int lo_ceil =
      (numerator(lo_r) + denominator(lo_r) - 1) / denominator(lo_r);
  const cpp_int hi_floor = numerator(hi_r) / denominator(hi_r);
  if (hi_floor < lo_ceil || hi_floor < 1 || lo_ceil > cpp_int(report.n)) return 0;

  const std::uint64_t lo = static_cast<std::uint64_t>(lo_ceil);
  const std::uint64_t hi = hi_floor > cpp_int(report.n)
                               ? report.n
                               : static_cast<std::uint64_t>(hi_floor);

  std::uint64_t count = 0;
  for (auto it = report.cycle_hist.lower_bound(lo);
       it != report.cycle_hist.end() && it->first <= hi; ++it)
    count += it->second;
  return count;
}

}  // namespace a2r
