#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ged/approx.hpp"
#include "ged/core.hpp"
#include "ged/exact.hpp"
#include "ged/sed.hpp"

namespace py = pybind11;

namespace {

using PairList = std::vector<std::pair<std::size_t, std::size_t>>;

// Accepts anything numpy can turn into a 2-D float64 array of shape (n, d).
ged::PointSequence to_points(const py::array_t<double, py::array::c_style | py::array::forcecast>& a) {
    if (a.ndim() != 2)
        throw py::value_error("points must be a 2-D array of shape (n, d)");
    const auto n = static_cast<std::size_t>(a.shape(0));
    const auto d = static_cast<std::size_t>(a.shape(1));
    if (n > 0 && d == 0)
        throw py::value_error("points must have at least one coordinate");
    return ged::PointSequence(d, std::vector<double>(a.data(), a.data() + n * d));
}

ged::Matching to_matching(const PairList& pairs) {
    ged::Matching m;
    for (const auto& [i, j] : pairs)
        m.pairs.push_back({i, j});
    return m;
}

PairList to_pairs(const ged::Matching& m) {
    PairList out;
    out.reserve(m.size());
    for (const auto& p : m.pairs)
        out.emplace_back(p.i, p.j);
    return out;
}

ged::ApproxParams make_params(double c, std::optional<double> alpha, std::uint64_t seed, double gap_penalty,
                              unsigned threads) {
    ged::ApproxParams params;
    params.c = c;
    params.alpha = alpha;
    params.seed = seed;
    params.model.gap_penalty = gap_penalty;
    params.threads = threads;
    return params;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Geometric edit distance between point sequences";

    py::register_exception<ged::InvalidMatching>(m, "InvalidMatching", PyExc_ValueError);

    py::class_<ged::SuccessInfo>(m, "SuccessInfo")
        .def_readonly("guess", &ged::SuccessInfo::guess)
        .def_readonly("outer", &ged::SuccessInfo::outer)
        .def_readonly("inner", &ged::SuccessInfo::inner)
        .def_readonly("threshold", &ged::SuccessInfo::threshold)
        .def("__repr__", [](const ged::SuccessInfo& s) {
            return "SuccessInfo(guess=" + py::repr(py::float_(s.guess)).cast<std::string>() +
                   ", outer=" + std::to_string(s.outer) + ", inner=" + std::to_string(s.inner) + ")";
        });

    py::class_<ged::GedResult>(m, "GedResult")
        .def_readonly("cost", &ged::GedResult::cost)
        .def_property_readonly("matching", [](const ged::GedResult& r) { return to_pairs(r.matching); })
        .def_readonly("algorithm", &ged::GedResult::algorithm)
        .def_readonly("seed", &ged::GedResult::seed)
        .def_readonly("success", &ged::GedResult::success)
        .def_readonly("warnings", &ged::GedResult::warnings)
        .def("__repr__", [](const ged::GedResult& r) {
            return "GedResult(algorithm='" + r.algorithm + "', cost=" +
                   py::repr(py::float_(r.cost)).cast<std::string>() + ", pairs=" + std::to_string(r.matching.size()) +
                   ")";
        });

    m.def(
        "matching_cost",
        [](const py::array_t<double>& p, const py::array_t<double>& q, const PairList& pairs, double gap_penalty) {
            return ged::matching_cost(to_points(p), to_points(q), to_matching(pairs), ged::CostModel{gap_penalty});
        },
        py::arg("p"), py::arg("q"), py::arg("matching"), py::arg("gap_penalty") = 1.0,
        "Sum of matched distances plus gap_penalty per unmatched point. Pairs are 1-based.");

    m.def(
        "validate_matching",
        [](const py::array_t<double>& p, const py::array_t<double>& q, const PairList& pairs) {
            const auto report = ged::validate_matching(to_points(p), to_points(q), to_matching(pairs));
            std::vector<std::string> out;
            for (const auto& v : report.violations)
                out.emplace_back(ged::to_string(v.kind));
            return out;
        },
        py::arg("p"), py::arg("q"), py::arg("matching"),
        "List of violation kinds; empty when the matching is valid.");

    m.def(
        "exact_ged",
        [](const py::array_t<double>& p, const py::array_t<double>& q, double gap_penalty) {
            const auto pp = to_points(p);
            const auto qq = to_points(q);
            py::gil_scoped_release release;
            return ged::exact_ged(pp, qq, ged::CostModel{gap_penalty});
        },
        py::arg("p"), py::arg("q"), py::arg("gap_penalty") = 1.0);

    m.def(
        "banded_ged",
        [](const py::array_t<double>& p, const py::array_t<double>& q, long long k, double gap_penalty) {
            const auto pp = to_points(p);
            const auto qq = to_points(q);
            py::gil_scoped_release release;
            return ged::banded_ged(pp, qq, k, ged::CostModel{gap_penalty});
        },
        py::arg("p"), py::arg("q"), py::arg("k"), py::arg("gap_penalty") = 1.0,
        "Exact distance when it is at most k gap penalties, otherwise None.");

    m.def(
        "ged_sqrt_approx",
        [](const py::array_t<double>& p, const py::array_t<double>& q, std::uint64_t seed, double c,
           double gap_penalty, unsigned threads) {
            const auto pp = to_points(p);
            const auto qq = to_points(q);
            const auto params = make_params(c, std::nullopt, seed, gap_penalty, threads);
            py::gil_scoped_release release;
            return ged::ged_sqrt_approx(pp, qq, params);
        },
        py::arg("p"), py::arg("q"), py::arg("seed") = 0, py::arg("c") = 2.0, py::arg("gap_penalty") = 1.0,
        py::arg("threads") = 1);

    m.def(
        "ged_alpha_approx",
        [](const py::array_t<double>& p, const py::array_t<double>& q, double alpha, std::uint64_t seed, double c,
           double gap_penalty, unsigned threads) {
            const auto pp = to_points(p);
            const auto qq = to_points(q);
            const auto params = make_params(c, alpha, seed, gap_penalty, threads);
            py::gil_scoped_release release;
            return ged::ged_alpha_approx(pp, qq, params);
        },
        py::arg("p"), py::arg("q"), py::arg("alpha"), py::arg("seed") = 0, py::arg("c") = 2.0,
        py::arg("gap_penalty") = 1.0, py::arg("threads") = 1);

    m.def(
        "sed_decide",
        [](const std::vector<ged::Code>& s, const std::vector<ged::Code>& t, long long k) -> py::object {
            const auto r = ged::sed_decide(s, t, k);
            if (!r)
                return py::none();
            return py::make_tuple(r->distance, to_pairs(r->matching));
        },
        py::arg("s"), py::arg("t"), py::arg("k"),
        "(distance, pairs) if the insert/delete distance is at most k, otherwise None.");
}
