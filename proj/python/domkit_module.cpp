#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "domkit/circulant_solver.hpp"
#include "domkit/error.hpp"
#include "domkit/periodic_construct.hpp"
#include "domkit/ratio_formula.hpp"
#include "domkit/ratio_search.hpp"

#define STRINGIFY(x) #x
#define MACRO_STRINGIFY(x) STRINGIFY(x)

namespace py = pybind11;
using namespace domkit;

namespace {

py::object fraction(const Rational& r) {
    static py::object cls = py::module_::import("fractions").attr("Fraction");
    return cls(r.num(), r.den());
}

py::dict periodic(const PeriodicSet& set) {
    py::dict d;
    d["period"] = set.period();
    d["residues"] = set.residues();
    return d;
}

PeriodicSet to_periodic(std::int64_t period, std::vector<std::int64_t> residues) {
    return PeriodicSet(period, std::move(residues));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Domination ratios of integer distance digraphs and exact circulant domination numbers.";

    py::register_exception<ConsistencyError>(m, "ConsistencyError", PyExc_RuntimeError);

    m.def("decompose", [](std::int64_t d, std::int64_t s) {
        const auto dec = decompose(d, s);
        py::dict out;
        out["sign"] = dec.sign == Sign::positive ? "positive" : "negative";
        out["k"] = dec.k;
        out["e"] = dec.e;
        return out;
    }, py::arg("d"), py::arg("s"));

    m.def("domination_ratio", [](std::int64_t d, std::int64_t s) {
        const auto r = domination_ratio(d, s);
        py::dict out;
        out["ratio"] = fraction(r.value);
        out["case"] = std::string(case_name(r.case_label));
        out["k"] = r.decomposition ? py::cast(r.decomposition->k) : py::none();
        out["e"] = r.decomposition ? py::cast(r.decomposition->e) : py::none();
        return out;
    }, py::arg("d"), py::arg("s"), "Closed-form domination ratio of Cay(Z, {1, ..., d-2, s}).");

    m.def("eds_exists_family", &eds_exists_family, py::arg("d"), py::arg("s"));

    m.def("construct_best", [](std::int64_t d, std::int64_t s) {
        const auto built = construct_best(d, s);
        auto out = periodic(built.set);
        out["density"] = fraction(density(built.set));
        out["blocks"] = blocks_of(built.set).sizes();
        return out;
    }, py::arg("d"), py::arg("s"), "Verified periodic dominating set of minimum density.");

    m.def("verify_dominating", [](std::int64_t period, std::vector<std::int64_t> residues, std::vector<std::int64_t> diffs) {
        return verify_dominating(to_periodic(period, std::move(residues)), DifferenceSet(std::move(diffs)));
    }, py::arg("period"), py::arg("residues"), py::arg("diffs"));

    m.def("verify_efficient", [](std::int64_t period, std::vector<std::int64_t> residues, std::vector<std::int64_t> diffs) {
        return verify_efficient(to_periodic(period, std::move(residues)), DifferenceSet(std::move(diffs)));
    }, py::arg("period"), py::arg("residues"), py::arg("diffs"));

    m.def("gamma_exact", [](std::int64_t n, std::vector<std::int64_t> connection) {
        py::gil_scoped_release release;
        const auto cert = gamma_exact(CirculantInstance(n, connection));
        py::gil_scoped_acquire acquire;
        py::dict out;
        out["gamma"] = cert.gamma;
        out["witness"] = cert.witness;
        out["explored"] = cert.explored;
        return out;
    }, py::arg("n"), py::arg("connection"), "Exact domination number of Cay(Z_n, connection).");

    m.def("gamma_bruteforce", [](std::int64_t n, std::vector<std::int64_t> connection) {
        return gamma_bruteforce(CirculantInstance(n, connection));
    }, py::arg("n"), py::arg("connection"));

    m.def("perfect_code", [](std::int64_t n, std::vector<std::int64_t> connection) {
        return perfect_code_exists(CirculantInstance(n, connection));
    }, py::arg("n"), py::arg("connection"), "Perfect code of Cay(Z_n, connection), or None.");

    m.def("search_ratio", [](std::vector<std::int64_t> diffs, std::int64_t max_period) {
        const DifferenceSet set(std::move(diffs));
        SearchReport report = [&] {
            py::gil_scoped_release release;
            return search_ratio(set, max_period);
        }();
        py::list rows;
        for (const auto& row : report.per_period) rows.append(py::make_tuple(row.period, row.gamma, fraction(row.ratio)));
        py::dict out;
        out["best_ratio"] = fraction(report.best_ratio);
        out["best_period"] = report.best_period;
        out["best_witness"] = periodic(report.best_witness);
        out["per_period"] = rows;
        return out;
    }, py::arg("diffs"), py::arg("max_period"), "Upper bound on the domination ratio of Cay(Z, diffs) from periods 1..max_period.");

    m.def("consistency_check", [](std::int64_t d, std::int64_t s, std::int64_t max_period) {
        const auto r = consistency_check(d, s, max_period);
        py::dict out;
        out["formula"] = fraction(r.formula);
        out["best_ratio"] = fraction(r.best_ratio);
        out["best_period"] = r.best_period;
        out["construction_period"] = r.construction_period;
        out["violating_periods"] = r.violating_periods;
        out["consistent"] = r.consistent;
        return out;
    }, py::arg("d"), py::arg("s"), py::arg("max_period"));

#ifdef VERSION_INFO
    m.attr("__version__") = MACRO_STRINGIFY(VERSION_INFO);
#else
    m.attr("__version__") = "dev";
#endif
}
