#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sphcap/kernels.hpp"
#include "sphcap/oracles.hpp"
#include "sphcap/pointsets.hpp"
#include "sphcap/quality.hpp"
#include "sphcap/special_functions.hpp"

namespace py = pybind11;
using namespace sphcap;

namespace {

PointSet pointset_from_rows(int d, const std::vector<std::vector<double>>& rows,
                            bool renormalize) {
    std::vector<UnitPoint> pts;
    pts.reserve(rows.size());
    for (const auto& r : rows) pts.emplace_back(r, renormalize);
    return PointSet(d, std::move(pts));
}

std::vector<std::vector<double>> pointset_rows(const PointSet& P) {
    std::vector<std::vector<double>> rows;
    rows.reserve(P.points.size());
    for (const UnitPoint& p : P.points) rows.push_back(p.coords());
    return rows;
}

}  // namespace

PYBIND11_MODULE(_sphcap, m) {
    m.doc() = "Quality measures for point configurations on the unit sphere";

    py::class_<UnitPoint>(m, "UnitPoint")
        .def(py::init<std::vector<double>, bool>(), py::arg("coords"),
             py::arg("renormalize") = false)
        .def_property_readonly("coords", &UnitPoint::coords)
        .def_property_readonly("dim", &UnitPoint::dim)
        .def("antipode", &UnitPoint::antipode)
        .def("__getitem__",
             [](const UnitPoint& p, int i) {
                 if (i < 0 || i > p.dim()) throw py::index_error();
                 return p[i];
             });

    py::class_<PointSet>(m, "PointSet")
        .def(py::init(&pointset_from_rows), py::arg("d"), py::arg("rows"),
             py::arg("renormalize") = false)
        .def_readonly("d", &PointSet::d)
        .def_property_readonly("rows", &pointset_rows)
        .def("__len__", &PointSet::size);

    py::class_<WeightFunction>(m, "WeightFunction")
        .def_readonly("label", &WeightFunction::label)
        .def("__call__", [](const WeightFunction& w, double t) { return w.v(t); });

    py::class_<McConfig>(m, "McConfig")
        .def(py::init<>())
        .def_readwrite("samples", &McConfig::samples)
        .def_readwrite("seed", &McConfig::seed)
        .def_readwrite("chunk_size", &McConfig::chunk_size)
        .def_readwrite("threads", &McConfig::threads);

    py::class_<McEstimate>(m, "McEstimate")
        .def_readonly("value", &McEstimate::value)
        .def_readonly("std_error", &McEstimate::std_error)
        .def_readonly("samples", &McEstimate::samples);

    py::class_<QualityReport>(m, "QualityReport")
        .def_readonly("d", &QualityReport::d)
        .def_readonly("N", &QualityReport::N)
        .def_readonly("sum_of_distances", &QualityReport::sum_of_distances)
        .def_readonly("energy_gap", &QualityReport::energy_gap)
        .def_readonly("wce", &QualityReport::wce)
        .def_readonly("discrepancy", &QualityReport::discrepancy)
        .def("to_json", &QualityReport::to_json)
        .def("to_text", &QualityReport::to_text);

    // special functions
    m.def("log_gamma", &log_gamma, py::arg("x"));
    m.def("regularized_incomplete_beta", &regularized_incomplete_beta,
          py::arg("z"), py::arg("a"), py::arg("b"));
    m.def("area_ratio", &area_ratio, py::arg("d"));
    m.def("distance_constant", &distance_constant, py::arg("d"));
    m.def("cap_measure", &cap_measure, py::arg("d"), py::arg("t"));
    m.def("mean_distance", &mean_distance, py::arg("d"));

    // point sets
    m.def(
        "generate",
        [](const std::string& kind, int d, int n, std::uint64_t seed) {
            return generate({parse_generator_name(kind), d, n, seed});
        },
        py::arg("kind"), py::arg("d"), py::arg("n") = 1, py::arg("seed") = 0);
    m.def("sample_uniform", &sample_uniform, py::arg("d"), py::arg("n"),
          py::arg("seed"));
    m.def("save_csv", &save_csv_file, py::arg("points"), py::arg("path"));
    m.def("load_csv", &load_csv_file, py::arg("path"),
          py::arg("renormalize") = false);

    // weights and kernels
    m.def("parse_weight", &parse_weight, py::arg("spec"));
    m.def("unit_weight", &unit_weight);
    m.def("kernel_unweighted", &kernel_unweighted, py::arg("d"), py::arg("x"),
          py::arg("y"));
    m.def("kernel_weighted", &kernel_weighted, py::arg("d"), py::arg("x"),
          py::arg("y"), py::arg("weight"), py::arg("nodes") = 256);
    m.def("kernel_mean", &kernel_mean, py::arg("d"), py::arg("weight"),
          py::arg("nodes") = 256);
    m.def(
        "induced_distance",
        [](int d, const UnitPoint& x, const UnitPoint& y,
           const std::optional<WeightFunction>& w, int nodes) {
            return induced_distance({d, w, nodes}, x, y);
        },
        py::arg("d"), py::arg("x"), py::arg("y"),
        py::arg("weight") = std::nullopt, py::arg("nodes") = 256);

    // quality measures
    m.def("sum_of_distances", &sum_of_distances, py::arg("points"));
    m.def("energy_gap", &energy_gap, py::arg("points"));
    m.def("worst_case_error", &worst_case_error, py::arg("points"));
    m.def("discrepancy_closed", &discrepancy_closed, py::arg("points"));
    m.def("weighted_wce", &weighted_wce, py::arg("points"), py::arg("weight"),
          py::arg("nodes") = 256);
    m.def("representer_eval", &representer_eval, py::arg("points"), py::arg("x"));
    m.def("analyze", &analyze, py::arg("points"));

    // Monte Carlo oracles
    m.def("discrepancy_mc", &discrepancy_mc, py::arg("points"), py::arg("config"),
          py::call_guard<py::gil_scoped_release>());
    m.def("weighted_discrepancy_mc", &weighted_discrepancy_mc, py::arg("points"),
          py::arg("weight"), py::arg("config"));
    m.def("kernel_mc", &kernel_mc, py::arg("x"), py::arg("y"), py::arg("config"),
          py::call_guard<py::gil_scoped_release>());
}
