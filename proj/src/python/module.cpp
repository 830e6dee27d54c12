#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "latcount/bfile.hpp"
#include "latcount/closed_form.hpp"
#include "latcount/genfunc.hpp"
#include "latcount/oracle.hpp"
#include "latcount/polynomial.hpp"
#include "latcount/verify.hpp"

namespace py = pybind11;
using namespace latcount;

namespace {

py::int_ to_py(const BigInt& v) {
    return py::reinterpret_steal<py::int_>(PyLong_FromString(v.get_str().c_str(), nullptr, 10));
}

LatticeSpec make_spec(const std::string& family, int rank) {
    LatticeSpec spec{parse_family(family), rank};
    spec.validate();
    return spec;
}

CountKind parse_kind(const std::string& kind) {
    if (kind == "bulk") return CountKind::bulk;
    if (kind == "surface") return CountKind::surface;
    throw std::invalid_argument("kind must be 'bulk' or 'surface'");
}

py::list report_to_list(const VerificationReport& rep) {
    py::list out;
    for (const auto& c : rep.checks) {
        py::dict d;
        d["description"] = c.description;
        d["expected"] = c.expected;
        d["actual"] = c.actual;
        d["pass"] = c.pass;
        d["known_erratum"] = c.known_erratum;
        d["not_applicable"] = c.not_applicable;
        out.append(d);
    }
    return out;
}

std::string rational_str(const Rational& r) {
    return r.get_str();
}

}  // namespace

PYBIND11_MODULE(_latcount, m) {
    m.doc() = "Exact point counts of root lattices inside hypercubes";

    m.def(
        "bulk",
        [](const std::string& family, int rank, long n) { return to_py(bulk(make_spec(family, rank), n)); },
        py::arg("family"), py::arg("rank"), py::arg("n"),
        "Number of lattice points with every coordinate in [-n, n]");
    m.def(
        "surface",
        [](const std::string& family, int rank, long n) {
            return to_py(surface(make_spec(family, rank), n));
        },
        py::arg("family"), py::arg("rank"), py::arg("n"),
        "Number of lattice points with infinity norm exactly n");
    m.def(
        "oracle_bulk",
        [](const std::string& family, int rank, long n, bool full_lattice, std::uint64_t budget) {
            OracleConfig cfg{make_spec(family, rank), n};
            if (full_lattice) cfg.mode = OracleMode::full_lattice;
            cfg.budget = budget;
            return to_py(count_bulk_alphaspace(cfg));
        },
        py::arg("family"), py::arg("rank"), py::arg("n"), py::arg("full_lattice") = false,
        py::arg("budget") = std::uint64_t{1'000'000'000},
        "Brute-force count by enumerating lattice coordinates");
    m.def(
        "centered_multinomial",
        [](int k, long n) { return to_py(centered_multinomial(k, n)); }, py::arg("k"),
        py::arg("n"), "Central coefficient of (1 + x + ... + x^(2n))^k");
    m.def(
        "eta", [](int k, int j) { return to_py(eta(k, j)); }, py::arg("k"), py::arg("j"));
    m.def(
        "gamma_coeff", [](int k, int l) { return to_py(gamma_coeff(k, l)); }, py::arg("k"),
        py::arg("l"));

    m.def(
        "genfunc",
        [](const std::string& family, int rank, const std::string& kind) {
            RationalGF gf = gf_bulk(make_spec(family, rank));
            if (parse_kind(kind) == CountKind::surface) gf = gf_surface(gf);
            py::list numerator;
            for (const auto& c : gf.numerator) numerator.append(to_py(c));
            py::dict d;
            d["numerator"] = numerator;
            d["pow_one_minus_x"] = gf.pow_one_minus_x;
            d["pow_one_plus_x"] = gf.pow_one_plus_x;
            return d;
        },
        py::arg("family"), py::arg("rank"), py::arg("kind") = "bulk",
        "Rational generating function as numerator / ((1-x)^a (1+x)^b)");
    m.def(
        "expand",
        [](const std::string& family, int rank, const std::string& kind, int count) {
            RationalGF gf = gf_bulk(make_spec(family, rank));
            if (parse_kind(kind) == CountKind::surface) gf = gf_surface(gf);
            py::list out;
            for (const auto& c : gf_expand(gf, count)) out.append(to_py(c));
            return out;
        },
        py::arg("family"), py::arg("rank"), py::arg("kind"), py::arg("count"),
        "First `count` series coefficients of the generating function");

    m.def(
        "fit_polynomial",
        [](const std::string& family, int rank, const std::string& kind, const std::string& var) {
            PolyVariable variable;
            if (var == "n")
                variable = PolyVariable::n;
            else if (var == "L")
                variable = PolyVariable::L;
            else
                throw std::invalid_argument("variable must be 'n' or 'L'");
            QuasiPolynomial qp =
                fit_quasipolynomial(make_spec(family, rank), parse_kind(kind), variable);
            py::list components;
            for (const auto& comp : qp.components) {
                py::list coeffs;
                for (const auto& c : comp.coeffs()) coeffs.append(rational_str(c));
                components.append(coeffs);
            }
            py::dict d;
            d["period"] = qp.period;
            d["variable"] = var;
            d["components"] = components;
            return d;
        },
        py::arg("family"), py::arg("rank"), py::arg("kind") = "bulk", py::arg("variable") = "n",
        "Exact quasi-polynomial fit; coefficients as rational strings, constant term first");

    m.def("verify_tables", [](const std::string& fixtures, const std::string& errata) {
        return report_to_list(verify_tables(fixtures, errata));
    });
    m.def(
        "verify_oracle_equivalence",
        [](long max_n) { return report_to_list(verify_oracle_equivalence(max_n)); },
        py::arg("max_n") = 1);
    m.def(
        "verify_conjecture_bulk",
        [](int column_n, int k_max) { return report_to_list(verify_conjecture_bulk(column_n, k_max)); },
        py::arg("column_n"), py::arg("k_max"));
    m.def(
        "verify_conjecture_surface",
        [](int k_max) { return report_to_list(verify_conjecture_surface(k_max)); },
        py::arg("k_max"));

    py::register_exception<BudgetExceeded>(m, "BudgetExceeded");
    py::register_exception<InvalidSpec>(m, "InvalidSpec");
    py::register_exception<BFileError>(m, "BFileError");
}
