#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <array>
#include <sstream>

#include "polarcg/cli.hpp"
#include "polarcg/coupling.hpp"
#include "polarcg/recoupling.hpp"
#include "polarcg/table.hpp"

namespace py = pybind11;
using namespace polarcg;

namespace {

HalfInt parse_half(const std::string& text) { return half_int_from_string(text); }

py::dict value_to_dict(const coupling::CGValue& value) {
    py::dict out;
    out["value"] = exact::to_string(value.value());
    out["squared"] = exact::rat_to_string(value.squared());
    out["sign"] = value.sign;
    out["float"] = value.value().to_double();
    return out;
}

} // namespace

PYBIND11_MODULE(_polarcg, m) {
    m.doc() = "Exact angular-momentum coupling coefficients (Clebsch-Gordan, 3j, 6j, 9j) "
              "computed through the harmonic-oscillator polar basis. Quantum numbers are "
              "passed as strings like '1/2', '3/2' or '2'.";

    py::register_exception<polarcg::domain_error>(m, "DomainError", PyExc_ValueError);
    py::register_exception<polarcg::resource_error>(m, "ResourceError", PyExc_RuntimeError);

    m.def(
        "cg",
        [](const std::string& j1, const std::string& j2, const std::string& j3,
           const std::string& m1, const std::string& m2) {
            const basis::CGKey key = basis::CGKey::make(parse_half(j1), parse_half(j2),
                                                        parse_half(j3), parse_half(m1),
                                                        parse_half(m2));
            return value_to_dict(coupling::cg_racah_oracle(key));
        },
        py::arg("j1"), py::arg("j2"), py::arg("j3"), py::arg("m1"), py::arg("m2"),
        "Clebsch-Gordan coefficient <j1 j2; m1 m2 | j3 m1+m2>.");

    m.def(
        "threej",
        [](const std::string& j1, const std::string& j2, const std::string& j3,
           const std::string& m1, const std::string& m2, const std::string& m3) {
            return value_to_dict(coupling::threej(parse_half(j1), parse_half(j2), parse_half(j3),
                                                  parse_half(m1), parse_half(m2),
                                                  parse_half(m3)));
        },
        py::arg("j1"), py::arg("j2"), py::arg("j3"), py::arg("m1"), py::arg("m2"), py::arg("m3"));

    m.def(
        "sixj",
        [](const std::string& a, const std::string& b, const std::string& c,
           const std::string& d, const std::string& e, const std::string& f) {
            return value_to_dict(recoupling::sixj(parse_half(a), parse_half(b), parse_half(c),
                                                  parse_half(d), parse_half(e), parse_half(f)));
        },
        py::arg("a"), py::arg("b"), py::arg("c"), py::arg("d"), py::arg("e"), py::arg("f"),
        "6j symbol {a b c; d e f}.");

    m.def(
        "ninej",
        [](const std::vector<std::vector<std::string>>& rows) {
            if (rows.size() != 3 || rows[0].size() != 3 || rows[1].size() != 3 ||
                rows[2].size() != 3)
                throw domain_error("ninej: expected a 3x3 array of quantum numbers");
            std::array<std::array<HalfInt, 3>, 3> j;
            for (int r = 0; r < 3; ++r)
                for (int c = 0; c < 3; ++c) j[r][c] = parse_half(rows[r][c]);
            return value_to_dict(recoupling::ninej(j));
        },
        py::arg("rows"), "9j symbol from a 3x3 nested list.");

    m.def(
        "passage",
        [](const std::string& j1, const std::string& m1, const std::string& j2,
           const std::string& m2, const std::string& j3, const std::string& route) {
            coupling::Route route_value;
            if (route == "abs") {
                route_value = coupling::Route::abs;
            } else if (route == "signed") {
                route_value = coupling::Route::with_sign;
            } else {
                throw domain_error("passage: route must be 'abs' or 'signed'");
            }
            return value_to_dict(coupling::passage_element(parse_half(j1), parse_half(m1),
                                                           parse_half(j2), parse_half(m2),
                                                           parse_half(j3), route_value));
        },
        py::arg("j1"), py::arg("m1"), py::arg("j2"), py::arg("m2"), py::arg("j3"),
        py::arg("route") = "abs",
        "Passage matrix element <Phi Phi | Psi> via the chosen index map.");

    m.def(
        "table",
        [](int max_2j, const std::string& what, const std::string& format, int threads) {
            return table::emit_table(max_2j, table::what_from_string(what),
                                     table::format_from_string(format), threads);
        },
        py::arg("max_2j"), py::arg("what") = "cg", py::arg("format") = "csv",
        py::arg("threads") = 1, "Deterministic sweep table as a string.");

    m.def(
        "run_cli",
        [](const std::vector<std::string>& args) {
            std::ostringstream out, err;
            const int code = cli::run_command(args, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Run a CLI invocation in-process; returns (exit_code, stdout, stderr).");
}
