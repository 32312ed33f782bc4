#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace a2r {

// Run of consecutive vertices sharing one degree. Sequences built by the
// canonical constructors have O(#distinct degrees) runs, which keeps a
// DegreeSequence O(1)-sized even for n ~ 1e9 (lazy exploration relies on it).
struct DegreeRun {
  std::uint64_t first_vertex;
  std::uint64_t first_half_edge;
  std::uint64_t count;
  std::uint32_t degree;
};

// Immutable degree sequence with the derived quantities n_j, ell and
// ell_ne2 (half-edges on vertices of degree != 2). Degree-0 vertices are
// rejected and the total degree must be even.
class DegreeSequence {
 public:
  // Vertex ids follow the order of `degrees`.
  static DegreeSequence from_degrees(const std::vector<std::uint32_t>& degrees);

  // n2 degree-2 vertices first, then the given degree >= 3 classes in
  // ascending degree order. Canonical layout for reproducible sampling.
  static DegreeSequence build_upper(std::uint64_t n2,
                                    const std::map<std::uint32_t, std::uint64_t>& higher);

  // n2 degree-2 vertices first, then n1 degree-1 vertices.
  static DegreeSequence build_lower(std::uint64_t n2, std::uint64_t n1);

  // One integer degree per line; '#' lines and blank lines are skipped.
  static DegreeSequence load(std::istream& in);
  static DegreeSequence load_file(const std::string& path);

  std::uint64_t n() const { return n_; }
  std::uint64_t ell() const { return ell_; }
  std::uint64_t ell_ne2() const { return ell_ne2_; }

  // n_j; zero for degrees not present.
  std::uint64_t count(std::uint32_t degree) const;
  std::uint32_t max_degree() const;

  std::uint32_t degree_of(std::uint64_t v) const;
  std::uint64_t half_edge_begin(std::uint64_t v) const;
  std::uint64_t vertex_of_half_edge(std::uint64_t h) const;
  // (vertex, slot) of half-edge h.
  std::pair<std::uint64_t, std::uint32_t> locate(std::uint64_t h) const;

  const std::vector<DegreeRun>& runs() const { return runs_; }
  // (degree, n_j) pairs sorted by degree.
  std::vector<std::pair<std::uint32_t, std::uint64_t>> degree_counts() const;

  // v-th vertex of the given degree, in vertex order (0-based).
  std::uint64_t nth_vertex_of_degree(std::uint32_t degree, std::uint64_t index) const;

  bool operator==(const DegreeSequence& other) const { return runs_ == other.runs_; }

 private:
  DegreeSequence() = default;
  static DegreeSequence from_runs(std::vector<DegreeRun> runs);

  std::vector<DegreeRun> runs_;
  std::map<std::uint32_t, std::uint64_t> counts_;
  std::uint64_t n_ = 0;
  std::uint64_t ell_ = 0;
  std::uint64_t ell_ne2_ = 0;
};

inline bool operator==(const DegreeRun& a, const DegreeRun& b) {
  return a.first_vertex == b.first_vertex && a.first_half_edge == b.first_half_edge &&
         a.count == b.count && a.degree == b.degree;
}

enum class Regime { UpperCandidate, LowerCandidate, Mixed, PureTwoRegular };

const char* regime_name(Regime r) noexcept;

// Per-instance regime classification. The defining conditions are
// asymptotic, so a single instance reports structural membership plus the
// two ratios; growth is judged across a family sweep.
struct RegimeDiagnostics {
  Regime regime;
  double ratio_ell_n;
  double ratio_lne2_n;
};

RegimeDiagnostics diagnose(const DegreeSequence& seq);

}  // namespace a2r
