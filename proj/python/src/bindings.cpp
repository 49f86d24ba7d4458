#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "ffperm/cli.hpp"
#include "ffperm/criteria.hpp"
#include "ffperm/sets.hpp"
#include "ffperm/suite.hpp"

namespace py = pybind11;
using namespace ffperm;

namespace {

std::vector<Index> indices(const Subset& s) {
    std::vector<Index> out;
    for (Elem e : s) out.push_back(e.v);
    return out;
}

FamilyId family_or_throw(const std::string& name) {
    const auto id = parse_family(name);
    if (!id) throw SpecError("unknown family '" + name + "'");
    return *id;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Permutation polynomials over GF(q^3): field arithmetic, special sets and exhaustive checks.";

    py::register_exception<FieldError>(m, "FieldError", PyExc_ValueError);
    py::register_exception<SpecError>(m, "SpecError", PyExc_ValueError);

    // Elements cross the boundary as their base-p index.
    py::class_<Field>(m, "Field")
        .def(py::init([](unsigned p, unsigned n) { return Field::build(p, n); }), py::arg("p"), py::arg("n"))
        .def_property_readonly("p", &Field::characteristic)
        .def_property_readonly("n", &Field::degree)
        .def_property_readonly("size", &Field::size)
        .def_property_readonly("modulus", &Field::modulus)
        .def_property_readonly("generator", [](const Field& f) { return f.generator().v; })
        .def("modulus_string", &Field::modulus_string)
        .def("add", [](const Field& f, Index a, Index b) { return f.add(f.from_index(a), f.from_index(b)).v; })
        .def("sub", [](const Field& f, Index a, Index b) { return f.sub(f.from_index(a), f.from_index(b)).v; })
        .def("mul", [](const Field& f, Index a, Index b) { return f.mul(f.from_index(a), f.from_index(b)).v; })
        .def("inv", [](const Field& f, Index a) { return f.inv(f.from_index(a)).v; })
        .def("pow", [](const Field& f, Index a, std::uint64_t e) { return f.pow(f.from_index(a), e).v; })
        .def("trace_rel", [](const Field& f, Index a, unsigned k) { return f.trace_rel(f.from_index(a), k).v; })
        .def("coeffs", [](const Field& f, Index a) { return f.coeffs(f.from_index(a)); })
        .def("__repr__", [](const Field& f) {
            return "Field(p=" + std::to_string(f.characteristic()) + ", n=" + std::to_string(f.degree()) + ")";
        });

    m.def("gamma", [](const Field& f, unsigned k) { return indices(gamma_set(f, k)); });
    m.def("lambda_set", [](const Field& f, unsigned k) { return indices(lambda_set(f, k)); });
    m.def("mu", [](const Field& f, std::uint64_t order) { return indices(mu_set(f, order)); });

    m.def("gcd_pattern", [](unsigned k, unsigned l) {
        const GcdPattern g = gcd_pattern(k, l);
        return py::make_tuple(g.coprime_plus, g.coprime_minus);
    });

    m.def(
        "check",
        [](const std::string& family, unsigned p, unsigned k, std::optional<unsigned> l, std::optional<unsigned> mm,
           std::optional<unsigned> n, Index c_index) {
            const FamilyId id = family_or_throw(family);
            const Field f3 = Field::build(p, 3 * k);
            FamilySpec spec{id, p, k, l, mm, n, std::nullopt};
            if (family_traits(id).coef != CoefDomain::None) spec.c = f3.from_index(c_index);
            py::gil_scoped_release release;
            return to_json(check_instance(f3, spec)).dump();
        },
        py::arg("family"), py::arg("p"), py::arg("k"), py::arg("l") = py::none(), py::arg("m") = py::none(),
        py::arg("n") = py::none(), py::arg("c_index") = 1,
        "One instance as a JSON object string.");

    m.def(
        "run_cli",
        [](const std::vector<std::string>& args) {
            std::ostringstream out, err;
            int code;
            {
                py::gil_scoped_release release;
                code = run_cli(args, out, err);
            }
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Runs the command line tool in-process; returns (exit_code, stdout, stderr).");
}
