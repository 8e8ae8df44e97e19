#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "covercraft/checks.hpp"
#include "covercraft/classify.hpp"
#include "covercraft/oracle.hpp"
#include "covercraft/records.hpp"

namespace py = pybind11;
using namespace covercraft;

namespace {

std::string divisor_repr(const DivisorClass& d) {
    return "DivisorClass(" + std::to_string(d.a) + ", " + std::to_string(d.b) + ")";
}

py::dict invariants_dict(const InvariantSet& inv) {
    py::dict d;
    d["p_g"] = inv.p_g;
    d["q"] = inv.q;
    d["chi"] = inv.chi;
    d["K2"] = inv.K2;
    d["degW"] = inv.degW;
    d["branch_product"] = inv.branch_product;
    d["generic_A1"] = inv.generic_A1;
    d["a1_note"] = to_string(inv.a1_note);
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact-arithmetic classification toolkit for quadruple Galois canonical covers "
              "of smooth surfaces of minimal degree";

    py::register_exception<Error>(m, "CovercraftError");

    py::class_<DivisorClass>(m, "DivisorClass")
        .def(py::init<Int, Int>(), py::arg("a") = 0, py::arg("b") = 0)
        .def_readonly("a", &DivisorClass::a)
        .def_readonly("b", &DivisorClass::b)
        .def(py::self == py::self)
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(-py::self)
        .def("__rmul__", [](const DivisorClass& d, Int k) { return k * d; })
        .def("is_zero", &DivisorClass::is_zero)
        .def("swapped", &DivisorClass::swapped)
        .def("__repr__", &divisor_repr);

    py::class_<CohomologyDims>(m, "CohomologyDims")
        .def_readonly("h0", &CohomologyDims::h0)
        .def_readonly("h1", &CohomologyDims::h1)
        .def_readonly("h2", &CohomologyDims::h2)
        .def("euler", &CohomologyDims::euler)
        .def("__iter__", [](const CohomologyDims& c) {
            return py::iter(py::make_tuple(c.h0, c.h1, c.h2));
        });

    py::class_<MinimalDegreeSurface>(m, "Surface")
        .def_static("p2", &MinimalDegreeSurface::linear_p2)
        .def_static("veronese", &MinimalDegreeSurface::veronese)
        .def_static("scroll", &MinimalDegreeSurface::scroll, py::arg("e"), py::arg("m"))
        .def_property_readonly("is_scroll", &MinimalDegreeSurface::is_scroll)
        .def("degree", &MinimalDegreeSurface::degree)
        .def("canonical_class", &MinimalDegreeSurface::canonical_class)
        .def("hyperplane_class", &MinimalDegreeSurface::hyperplane_class)
        .def("intersection_number", &MinimalDegreeSurface::intersection_number)
        .def("is_effective", &MinimalDegreeSurface::is_effective)
        .def("cohomology", &MinimalDegreeSurface::cohomology)
        .def("euler_characteristic_rr", &MinimalDegreeSurface::euler_characteristic_rr)
        .def("fixed_c0_multiplicity", &MinimalDegreeSurface::fixed_c0_multiplicity)
        .def("is_base_point_free", &MinimalDegreeSurface::is_base_point_free)
        .def("class_to_string", &MinimalDegreeSurface::class_to_string)
        .def("name", &MinimalDegreeSurface::name)
        .def(py::self == py::self)
        .def("__repr__", [](const MinimalDegreeSurface& w) { return "Surface(" + w.name() + ")"; });

    m.def("section_count_oracle", &section_count_oracle);

    py::enum_<GaloisGroup>(m, "GaloisGroup")
        .value("Z4", GaloisGroup::Z4)
        .value("Z2xZ2", GaloisGroup::Z2xZ2);
    m.def("parse_group", &parse_group);

    py::class_<CoverCandidate>(m, "CoverCandidate")
        .def_readonly("W", &CoverCandidate::W)
        .def_readonly("group", &CoverCandidate::group)
        .def_readonly("L1", &CoverCandidate::L1)
        .def_readonly("L2", &CoverCandidate::L2)
        .def_readonly("D1", &CoverCandidate::D1)
        .def_readonly("D2", &CoverCandidate::D2)
        .def_readonly("label", &CoverCandidate::label);

    m.def("make_candidate", &make_candidate);
    m.def("pushforward_summands", &pushforward_summands);
    m.def("cover_canonical_class", &cover_canonical_class);
    m.def("irregularity", &irregularity);
    m.def("geometric_genus", &geometric_genus);
    m.def("invariant_set", [](const CoverCandidate& c) { return invariants_dict(invariant_set(c)); });

    py::class_<ClassificationCase>(m, "ClassificationCase")
        .def_readonly("label", &ClassificationCase::label)
        .def_readonly("candidate", &ClassificationCase::candidate)
        .def_readonly("swap_duplicate_of", &ClassificationCase::swap_duplicate_of)
        .def_readonly("source", &ClassificationCase::source)
        .def_property_readonly(
            "invariants", [](const ClassificationCase& c) { return invariants_dict(c.invariants); })
        .def("__repr__", [](const ClassificationCase& c) {
            return "ClassificationCase(" + c.label + ")";
        });

    m.def("classify_scroll", &classify_scroll, py::arg("e"), py::arg("m"), py::arg("group"));
    m.def("classify_p2", &classify_p2);
    m.def("classify_veronese", []() {
        VeroneseClassification v = classify_veronese();
        py::dict witness;
        witness["required_degree"] = v.witness.required_degree;
        witness["parity_modulus"] = v.witness.parity_modulus;
        witness["solvable"] = v.witness.solvable;
        return py::make_tuple(v.cases, witness);
    });

    m.def("check_simple_cyclic_nonexistence", [](Int n_max, Int e_max, Int m_max) {
        py::list out;
        for (const auto& v : check_simple_cyclic_nonexistence(n_max, e_max, m_max))
            out.append(py::make_tuple(v.n, v.e, v.m));
        return out;
    });
    m.def("z4_no_simple_cyclic_property", &z4_no_simple_cyclic_property);

    m.def("render_json", [](const std::vector<ClassificationCase>& cases) {
        auto records = to_records(cases, &ExpectedTables::builtin());
        sort_records(records);
        return render(records, OutputFormat::Json);
    });
    m.def("diff_report", [](const std::vector<ClassificationCase>& cases,
                            const MinimalDegreeSurface& w, GaloisGroup g) {
        return diff_against_builtin(cases, w, g, ExpectedTables::builtin()).str();
    });
    m.def("selfcheck", []() {
        py::list out;
        for (const CheckResult& r : run_all_checks(ExpectedTables::builtin()))
            out.append(py::make_tuple(r.name, r.pass, r.detail));
        return out;
    });
}
