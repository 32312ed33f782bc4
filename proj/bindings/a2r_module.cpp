#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "a2r/components.hpp"
#include "a2r/errors.hpp"
#include "a2r/exploration.hpp"
#include "a2r/io.hpp"
#include "a2r/kernel.hpp"
#include "a2r/montecarlo.hpp"
#include "a2r/rng.hpp"
#include "a2r/sampler.hpp"
#include "a2r/stats.hpp"
#include "a2r/theory.hpp"
#include "a2r/version.hpp"

namespace py = pybind11;
using namespace a2r;

namespace {

py::object to_fraction(const theory::Rational& r) {
  std::ostringstream ss;
  ss << r;
  return py::module_::import("fractions").attr("Fraction")(ss.str());
}

py::object json_to_py(const nlohmann::json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

nlohmann::json py_to_json(const py::object& obj) {
  const std::string dumped =
      py::module_::import("json").attr("dumps")(obj).cast<std::string>();
  return nlohmann::json::parse(dumped);
}

}  // namespace

PYBIND11_MODULE(_a2r, m) {
  m.doc() = "Configuration-model multigraphs with almost-2-regular degree sequences";
  m.attr("__version__") = kVersion;
  m.attr("generator_name") = rng::kGeneratorName;

  py::register_exception<a2r::error>(m, "DomainError", PyExc_ValueError);

  py::enum_<Regime>(m, "Regime")
      .value("UpperCandidate", Regime::UpperCandidate)
      .value("LowerCandidate", Regime::LowerCandidate)
      .value("Mixed", Regime::Mixed)
      .value("PureTwoRegular", Regime::PureTwoRegular);

  py::class_<RegimeDiagnostics>(m, "RegimeDiagnostics")
      .def_readonly("regime", &RegimeDiagnostics::regime)
      .def_readonly("ratio_ell_n", &RegimeDiagnostics::ratio_ell_n)
      .def_readonly("ratio_lne2_n", &RegimeDiagnostics::ratio_lne2_n)
      .def("__repr__", [](const RegimeDiagnostics& d) {
        std::ostringstream ss;
        ss << "RegimeDiagnostics(" << regime_name(d.regime) << ", ell/n=" << d.ratio_ell_n
           << ", lne2/n=" << d.ratio_lne2_n << ")";
        return ss.str();
      });

  py::class_<DegreeSequence>(m, "DegreeSequence")
      .def_static("from_degrees", &DegreeSequence::from_degrees, py::arg("degrees"))
      .def_static(
          "build_upper",
          [](std::uint64_t n2, const std::map<std::uint32_t, std::uint64_t>& higher) {
            return DegreeSequence::build_upper(n2, higher);
          },
          py::arg("n2"), py::arg("higher") = std::map<std::uint32_t, std::uint64_t>{})
      .def_static("build_lower", &DegreeSequence::build_lower, py::arg("n2"), py::arg("n1"))
      .def_static("load_file", &DegreeSequence::load_file, py::arg("path"))
      .def_property_readonly("n", &DegreeSequence::n)
      .def_property_readonly("ell", &DegreeSequence::ell)
      .def_property_readonly("ell_ne2", &DegreeSequence::ell_ne2)
      .def("count", &DegreeSequence::count, py::arg("degree"))
      .def("degree_of", &DegreeSequence::degree_of, py::arg("vertex"))
      .def("degree_counts", &DegreeSequence::degree_counts)
      .def("__eq__", [](const DegreeSequence& a, const DegreeSequence& b) { return a == b; })
      .def("__repr__", [](const DegreeSequence& s) {
        std::ostringstream ss;
        ss << "DegreeSequence(n=" << s.n() << ", ell=" << s.ell() << ", ell_ne2=" << s.ell_ne2()
           << ")";
        return ss.str();
      });

  m.def("diagnose", &diagnose, py::arg("seq"));

  py::class_<MultiGraph>(m, "MultiGraph")
      .def_property_readonly("n", &MultiGraph::n)
      .def_property_readonly("ell", &MultiGraph::ell)
      .def_property_readonly("seq", &MultiGraph::seq)
      .def("pairs", &MultiGraph::pairs)
      .def("partner", &MultiGraph::partner, py::arg("half_edge"))
      .def("edges",
           [](const MultiGraph& g) {
             std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
             out.reserve(g.pair_count());
             for (const auto& [a, b] : g.half_edge_pairs()) out.emplace_back(a.vertex, b.vertex);
             return out;
           })
      .def("edge_list",
           [](const MultiGraph& g) {
             std::ostringstream ss;
             io::write_edge_list(ss, g);
             return ss.str();
           })
      .def("__repr__", [](const MultiGraph& g) {
        std::ostringstream ss;
        ss << "MultiGraph(n=" << g.n() << ", edges=" << g.pair_count() << ")";
        return ss.str();
      });

  m.def("sample", &sample, py::arg("seq"), py::arg("seed"),
        "Uniform configuration-model matching, deterministic in (seq, seed)");
  m.def(
      "enumerate_matchings",
      [](const DegreeSequence& seq) {
        std::vector<MultiGraph> out;
        MatchingEnumerator en(seq);
        while (auto g = en.next()) out.push_back(std::move(*g));
        return out;
      },
      py::arg("seq"), "All perfect matchings in canonical order (ell <= 14)");
  m.def(
      "matching_count",
      [](std::uint64_t ell) {
        std::ostringstream ss;
        ss << matching_count(ell);
        return py::module_::import("builtins").attr("int")(ss.str());
      },
      py::arg("ell"), "(ell-1)!! as a python int");

  py::enum_<Topology>(m, "Topology")
      .value("Cycle", Topology::Cycle)
      .value("Line", Topology::Line)
      .value("Complex", Topology::Complex);

  py::class_<ComponentReport>(m, "ComponentReport")
      .def_readonly("n", &ComponentReport::n)
      .def_readonly("sizes_desc", &ComponentReport::sizes_desc)
      .def_readonly("topo", &ComponentReport::topo)
      .def_readonly("cyclic_vertices", &ComponentReport::cyclic_vertices)
      .def_readonly("cycle_hist", &ComponentReport::cycle_hist)
      .def_readonly("line_sizes_desc", &ComponentReport::line_sizes_desc)
      .def_readonly("largest_cycle", &ComponentReport::largest_cycle)
      .def_readonly("non2_outside_giant", &ComponentReport::non2_outside_giant)
      .def("to_dict", [](const ComponentReport& r) { return json_to_py(io::report_to_json(r)); })
      .def("__repr__", [](const ComponentReport& r) {
        std::ostringstream ss;
        ss << "ComponentReport(components=" << r.sizes_desc.size()
           << ", cyclic_vertices=" << r.cyclic_vertices << ")";
        return ss.str();
      });

  m.def("analyze", &analyze, py::arg("graph"));
  m.def("component_labels", &component_labels, py::arg("graph"));
  m.def("deficiency", &deficiency, py::arg("report"));
  m.def("s_process", &s_process, py::arg("report"), py::arg("seq"), py::arg("a"), py::arg("t"));

  py::class_<KernelGraph>(m, "KernelGraph")
      .def_readonly("graph", &KernelGraph::graph)
      .def_readonly("back_map", &KernelGraph::back_map)
      .def_readonly("dropped_cycles", &KernelGraph::dropped_cycles);

  m.def("contract", &contract, py::arg("graph"));
  m.def("kernel_edge_identity", &kernel_edge_identity, py::arg("graph"));

  py::enum_<ExplorationOutcome>(m, "ExplorationOutcome")
      .value("HitNonTwo", ExplorationOutcome::HitNonTwo)
      .value("ClosedCycle", ExplorationOutcome::ClosedCycle)
      .value("Exhausted", ExplorationOutcome::Exhausted)
      .value("CapReached", ExplorationOutcome::CapReached);

  py::class_<ExplorationTrace>(m, "ExplorationTrace")
      .def_readonly("start", &ExplorationTrace::start)
      .def_readonly("steps", &ExplorationTrace::steps)
      .def_readonly("t_ne2", &ExplorationTrace::t_ne2)
      .def_readonly("t_cycle", &ExplorationTrace::t_cycle)
      .def_readonly("outcome", &ExplorationTrace::outcome)
      .def_readonly("component_size", &ExplorationTrace::component_size)
      .def_readonly("max_active", &ExplorationTrace::max_active)
      .def("to_dict", [](const ExplorationTrace& t) { return json_to_py(io::trace_to_json(t)); })
      .def("__repr__", [](const ExplorationTrace& t) {
        std::ostringstream ss;
        ss << "ExplorationTrace(outcome=" << outcome_name(t.outcome) << ", steps=" << t.steps
           << ", size=" << t.component_size << ")";
        return ss.str();
      });

  m.def("explore", &explore, py::arg("graph"), py::arg("start"));
  m.def(
      "explore_lazy",
      [](const DegreeSequence& seq, std::uint64_t start, std::uint64_t seed,
         std::optional<std::uint64_t> cap) {
        return cap ? explore_lazy(seq, start, seed, *cap) : explore_lazy(seq, start, seed);
      },
      py::arg("seq"), py::arg("start"), py::arg("seed"), py::arg("cap") = py::none());

  auto th = m.def_submodule("theory", "closed forms and numerics");
  th.def("lambda_intensity", &theory::lambda_intensity, py::arg("t"));
  th.def("poisson_mean",
         [](double a, double t) { return theory::poisson_mean(a, t); }, py::arg("a"),
         py::arg("t"));
  th.def("cdf_Y2", [](double a) { return theory::cdf_Y2(a); }, py::arg("a"));
  th.def("e1_series", &theory::e1_series, py::arg("x"));
  th.def("e1_continued_fraction", &theory::e1_continued_fraction, py::arg("x"));
  th.def("integrate_lambda", &theory::integrate_lambda, py::arg("a"), py::arg("t"),
         py::arg("abs_tol") = 1e-10);
  th.def(
      "expected_cyclic_vertices",
      [](const DegreeSequence& seq) { return to_fraction(theory::expected_cyclic_vertices(seq)); },
      py::arg("seq"));
  th.def(
      "expected_cycle_count",
      [](const DegreeSequence& seq, std::uint64_t k) {
        return to_fraction(theory::expected_cycle_count(seq, k));
      },
      py::arg("seq"), py::arg("k"));
  th.def(
      "line_survival",
      [](const DegreeSequence& seq, std::uint64_t k) {
        return to_fraction(theory::line_survival(seq, k));
      },
      py::arg("seq"), py::arg("k"));
  th.def("lower_regime_prediction", &theory::lower_regime_prediction, py::arg("n"),
         py::arg("n1"));

  auto st = m.def_submodule("stats", "estimators used by the experiment harness");
  st.def(
      "ks_distance",
      [](std::vector<double> sorted_sample, const std::function<double(double)>& cdf) {
        return stats::ks_distance(sorted_sample, cdf);
      },
      py::arg("sorted_sample"), py::arg("cdf"));
  st.def(
      "factorial_moment",
      [](const std::vector<std::uint64_t>& counts, unsigned h) {
        return stats::factorial_moment(counts, h);
      },
      py::arg("counts"), py::arg("h"));

  m.def(
      "run_experiment",
      [](const py::object& config) {
        const auto parsed = mc::ExperimentConfig::from_json(py_to_json(config));
        return json_to_py(mc::run(parsed).to_json());
      },
      py::arg("config"), "Run a replicated experiment from a config dict; returns a dict");

  m.def("mix_seed", [](std::uint64_t seed, std::uint64_t stream) { return rng::mix(seed, stream); },
        py::arg("seed"), py::arg("stream"));
}
