#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "algent/entropy.hpp"
#include "algent/mahler.hpp"
#include "algent/parse.hpp"
#include "algent/roots.hpp"
#include "algent/trajectory.hpp"

namespace py = pybind11;
using namespace algent;

namespace {

IntPolynomial int_poly_from_list(const std::vector<std::string>& coeffs) {
    std::vector<Integer> c;
    c.reserve(coeffs.size());
    for (const std::string& s : coeffs) c.emplace_back(s);
    return IntPolynomial{std::move(c)};
}

std::vector<std::string> int_poly_to_list(const IntPolynomial& f) {
    std::vector<std::string> out;
    out.reserve(f.c.size());
    for (const Integer& z : f.c) out.push_back(z.get_str());
    return out;
}

}  // namespace

PYBIND11_MODULE(_algent, m) {
    m.doc() = "exact algebraic entropy: Mahler measures, Yuzvinski values, trajectory growth";

    py::class_<MahlerResult>(m, "MahlerResult")
        .def_readonly("value_nats", &MahlerResult::value_nats)
        .def_readonly("log_leading", &MahlerResult::log_leading)
        .def_readonly("expanding_terms", &MahlerResult::expanding_terms)
        .def_readonly("error_bound", &MahlerResult::error_bound)
        .def_readonly("precision_bits", &MahlerResult::precision_bits);

    py::class_<EntropyValue>(m, "EntropyValue")
        .def_readonly("value_nats", &EntropyValue::value_nats)
        .def_readonly("log_s_term", &EntropyValue::log_s_term)
        .def_readonly("expanding_terms", &EntropyValue::expanding_terms)
        .def_readonly("reduced_dimension", &EntropyValue::reduced_dimension)
        .def_readonly("error_bound", &EntropyValue::error_bound);

    py::class_<TrajectoryRecord>(m, "TrajectoryRecord")
        .def_readonly("sizes", &TrajectoryRecord::sizes)
        .def_readonly("c", &TrajectoryRecord::c)
        .def_readonly("horizon", &TrajectoryRecord::horizon)
        .def_readonly("truncated", &TrajectoryRecord::truncated);

    py::class_<GrowthEstimate>(m, "GrowthEstimate")
        .def_readonly("fekete_upper", &GrowthEstimate::fekete_upper)
        .def_readonly("tail_slope", &GrowthEstimate::tail_slope)
        .def_readonly("horizon", &GrowthEstimate::horizon)
        .def_readonly("truncated", &GrowthEstimate::truncated);

    m.def(
        "mahler_measure",
        [](const std::string& poly_line, double tolerance) {
            return mahler_measure_any(parse_polynomial(poly_line), tolerance);
        },
        py::arg("poly_line"), py::arg("tolerance") = 1e-9,
        "Mahler measure (nats) of a polynomial given as an ascending coefficient line");

    m.def(
        "entropy",
        [](const std::string& matrix_text, double tolerance) {
            return endo_entropy(parse_matrix(matrix_text), tolerance);
        },
        py::arg("matrix_text"), py::arg("tolerance") = 1e-9,
        "entropy of the endomorphism of Q^n given by a square rational matrix");

    m.def(
        "is_cyclotomic",
        [](const std::vector<std::string>& coeffs) { return is_cyclotomic(int_poly_from_list(coeffs)); },
        py::arg("coeffs"), "exact: does every root lie on the unit circle as a root of unity");

    m.def(
        "lehmer_delta",
        [](const std::vector<std::string>& coeffs, long n) {
            return lehmer_delta(int_poly_from_list(coeffs), n).get_str();
        },
        py::arg("coeffs"), py::arg("n"),
        "|Res(f, t^n - 1)| for monic integer f, as a decimal string");

    m.def(
        "search_small_measures",
        [](int max_degree, int height, double threshold_nats, int workers) {
            std::vector<std::pair<std::vector<std::string>, double>> out;
            for (const SearchFinding& f :
                 search_small_measures(max_degree, height, threshold_nats, workers)) {
                out.emplace_back(int_poly_to_list(f.poly), f.measure.value_nats);
            }
            return out;
        },
        py::arg("max_degree"), py::arg("height"), py::arg("threshold_nats"),
        py::arg("workers") = 0,
        "all monic polynomials with 0 < measure < threshold, as (coefficients, value) pairs");

    m.def(
        "trajectory",
        [](const std::string& action, const std::string& element_set, int horizon,
           std::uint64_t cap) {
            EndoAction act = parse_action(action, [](const std::string& path) -> std::string {
                throw ParseError("matrix(@file) is not available through the python module: "
                                 "inline the rows instead (" + path + ")");
            });
            TrajectoryRecord rec =
                enumerate_trajectory(act, parse_element_set(element_set, act), horizon, cap);
            return py::make_tuple(rec, growth_estimate(rec));
        },
        py::arg("action"), py::arg("element_set"), py::arg("horizon") = 20,
        py::arg("cap") = std::uint64_t(5000000),
        "exact trajectory sizes and growth estimates; returns (record, estimate)");

    m.def("set_ladder_start_bits", &set_ladder_start_bits, py::arg("bits"),
          "first mpfr precision rung used by root refinement (clamped to [64, 2048])");
}
