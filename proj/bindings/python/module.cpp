#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mpdmp/algorithms.hpp"
#include "mpdmp/metrics.hpp"
#include "mpdmp/problems.hpp"
#include "mpdmp/sorting.hpp"

namespace py = pybind11;
using namespace mpdmp;

namespace {

const char* ps_kind_name(PsKind kind) {
    switch (kind) {
        case PsKind::Point: return "point";
        case PsKind::Segment: return "segment";
        case PsKind::ConvexPolygon: return "polygon";
    }
    return "?";
}

std::vector<std::pair<double, double>> as_pairs(
    const std::vector<Point2>& pts) {
    std::vector<std::pair<double, double>> out;
    out.reserve(pts.size());
    for (const auto& p : pts) out.emplace_back(p.x, p.y);
    return out;
}

}  // namespace

PYBIND11_MODULE(_mpdmp, m) {
    m.doc() = "Multiparty distance-minimization benchmarks and optimizers";

    py::enum_<Dominance>(m, "Dominance")
        .value("DOMINATES", Dominance::Dominates)
        .value("DOMINATED_BY", Dominance::DominatedBy)
        .value("INCOMPARABLE", Dominance::Incomparable)
        .value("EQUAL", Dominance::Equal);

    py::class_<PartyLayout>(m, "PartyLayout")
        .def(py::init<const std::vector<std::size_t>&>(), py::arg("sizes"))
        .def_property_readonly("num_parties", &PartyLayout::num_parties)
        .def_property_readonly("num_objectives", &PartyLayout::num_objectives)
        .def("party",
             [](const PartyLayout& self, std::size_t i) {
                 const IndexRange& r = self.party(i);
                 return std::make_pair(r.begin, r.end);
             },
             py::arg("i"));

    py::class_<MpDmpProblem>(m, "Problem")
        .def_readonly("id", &MpDmpProblem::id)
        .def_readonly("name", &MpDmpProblem::name)
        .def_readonly("layout", &MpDmpProblem::layout)
        .def_property_readonly("num_objectives", &MpDmpProblem::num_objectives)
        .def_property_readonly("bounds",
                               [](const MpDmpProblem& self) {
                                   return std::make_pair(self.bounds.lo,
                                                         self.bounds.hi);
                               })
        .def_property_readonly("targets", [](const MpDmpProblem& self) {
            std::vector<std::vector<std::pair<double, double>>> out;
            for (const auto& set : self.objective_targets)
                out.push_back(as_pairs(set));
            return out;
        });

    py::class_<PsRegion>(m, "PsRegion")
        .def_property_readonly("kind",
                               [](const PsRegion& self) {
                                   return ps_kind_name(self.kind);
                               })
        .def_property_readonly("vertices", [](const PsRegion& self) {
            return as_pairs(self.vertices);
        });

    py::class_<Individual>(m, "Individual")
        .def_property_readonly("x",
                               [](const Individual& self) {
                                   return std::make_pair(self.x.x1, self.x.x2);
                               })
        .def_readonly("f", &Individual::f)
        .def_readonly("party_levels", &Individual::party_levels);

    py::class_<AlgorithmConfig>(m, "Config")
        .def(py::init<>())
        .def_readwrite("pop_size", &AlgorithmConfig::pop_size)
        .def_readwrite("fe_budget", &AlgorithmConfig::fe_budget)
        .def_readwrite("fei_budget", &AlgorithmConfig::fei_budget)
        .def_readwrite("sbx_eta", &AlgorithmConfig::sbx_eta)
        .def_readwrite("sbx_pc", &AlgorithmConfig::sbx_pc)
        .def_readwrite("pm", &AlgorithmConfig::pm)
        .def_readwrite("pm_eta", &AlgorithmConfig::pm_eta)
        .def_readwrite("jade_p", &AlgorithmConfig::jade_p)
        .def_readwrite("jade_c", &AlgorithmConfig::jade_c)
        .def_readwrite("seed", &AlgorithmConfig::seed);

    py::class_<RunResult>(m, "RunResult")
        .def_readonly("mps", &RunResult::mps)
        .def_readonly("fe_used", &RunResult::fe_used)
        .def_readonly("init_fe_used", &RunResult::init_fe_used)
        .def_readonly("degenerate_mps", &RunResult::degenerate_mps);

    py::class_<IgdReport>(m, "IgdReport")
        .def_readonly("value", &IgdReport::value)
        .def_readonly("reference_size", &IgdReport::reference_size)
        .def_readonly("front_size", &IgdReport::front_size);

    m.def("suite", &suite, py::arg("id"));
    m.def("evaluate",
          [](const MpDmpProblem& problem, double x1, double x2) {
              return evaluate(problem, {x1, x2});
          },
          py::arg("problem"), py::arg("x1"), py::arg("x2"));
    m.def("true_ps", &true_ps, py::arg("id"));
    m.def("ps_oracle", &ps_oracle, py::arg("problem"));
    m.def("sample_ps_points",
          [](const PsRegion& region, std::size_t n) {
              return as_pairs(sample_ps_points(region, n));
          },
          py::arg("region"), py::arg("n"));
    m.def("sample_reference_front", &sample_reference_front,
          py::arg("problem"), py::arg("region"), py::arg("n"));

    m.def("compare",
          [](const ObjectiveVector& a, const ObjectiveVector& b,
             std::size_t begin, std::size_t end) {
              return compare(a, b, IndexRange{begin, end});
          },
          py::arg("a"), py::arg("b"), py::arg("begin"), py::arg("end"));
    m.def("nds",
          [](const std::vector<ObjectiveVector>& objs, std::size_t begin,
             std::size_t end) {
              return nds(objs, IndexRange{begin, end}).levels;
          },
          py::arg("objs"), py::arg("begin"), py::arg("end"));
    m.def("mpnds2",
          [](const std::vector<ObjectiveVector>& objs,
             const PartyLayout& layout) {
              return mpnds2(objs, layout).levels;
          },
          py::arg("objs"), py::arg("layout"));
    m.def("party_level_rows", &party_level_rows, py::arg("objs"),
          py::arg("layout"));
    m.def("crowding_distance",
          [](const std::vector<ObjectiveVector>& front, std::size_t begin,
             std::size_t end) {
              return crowding_distance(front, IndexRange{begin, end});
          },
          py::arg("front"), py::arg("begin"), py::arg("end"));
    m.def("crowding_entropy",
          [](const std::vector<ObjectiveVector>& front, std::size_t begin,
             std::size_t end) {
              return crowding_entropy(front, IndexRange{begin, end});
          },
          py::arg("front"), py::arg("begin"), py::arg("end"));

    m.def("run_algorithm",
          [](const std::string& name, const MpDmpProblem& problem,
             const AlgorithmConfig& config) {
              return run_algorithm(algorithm_from_string(name), problem,
                                   config);
          },
          py::arg("algorithm"), py::arg("problem"), py::arg("config"),
          py::call_guard<py::gil_scoped_release>());
    m.def("final_mps_filter",
          [](const std::vector<Individual>& pop, const MpDmpProblem& problem) {
              return final_mps_filter(pop, problem);
          },
          py::arg("pop"), py::arg("problem"));
    m.def("igd", &igd, py::arg("reference"), py::arg("front"),
          py::arg("layout"));
}
