// Python bindings. Types are passed as labels ("E8"); matrices and roots come
// back as nested lists, JSON documents as Python dicts via json.loads.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "geomlie/coxplane.hpp"
#include "geomlie/liealg.hpp"
#include "geomlie/verify.hpp"
#include "geomlie/wheel.hpp"

namespace py = pybind11;
using namespace geomlie;

namespace {

py::object from_json(const nlohmann::json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

nlohmann::json to_json(const py::object& o) {
  return nlohmann::json::parse(py::module_::import("json").attr("dumps")(o).cast<std::string>());
}

std::vector<IntVector> rows(const IntMatrix& m) { return m.to_rows(); }

Root as_root(const IntVector& v) { return Root(v); }

}  // namespace

PYBIND11_MODULE(_geomlie, m) {
  m.doc() = "Geometric root systems and Lie algebras of ADE singularities";

  // later registrations are tried first, so the base class goes first
  py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<TypeError>(m, "TypeLabelError", PyExc_ValueError);
  py::register_exception<FoldingError>(m, "FoldingError", PyExc_ValueError);
  py::register_exception<SegmentError>(m, "SegmentError", PyExc_ValueError);
  py::register_exception<CoxeterPlaneError>(m, "CoxeterPlaneError", PyExc_ArithmeticError);

  m.def("type_info", [](const std::string& label) {
    const LieType t = make_type(label);
    py::dict d;
    d["name"] = t.name();
    d["rank"] = t.rank;
    d["coxeter_number"] = t.coxeter_number;
    d["root_count"] = t.root_count;
    return d;
  }, py::arg("type"));
  m.def("standard_types", [] {
    std::vector<std::string> out;
    for (const auto& t : standard_types()) out.push_back(t.name());
    return out;
  });

  m.def("seifert_matrix", [](const std::string& t) { return rows(seifert_matrix(make_type(t)).entries); });
  m.def("cartan_matrix", [](const std::string& t) { return rows(cartan_matrix(make_type(t)).entries); });
  m.def("pairing", [](const std::string& t, const IntVector& a, const IntVector& b) {
    return pairing(make_type(t), RelativeCycle(a), RelativeCycle(b));
  });

  m.def("roots", [](const std::string& t) {
    std::vector<IntVector> out;
    for (const auto& r : enumerate_roots(make_type(t)).roots()) out.push_back(r.coords);
    return out;
  });
  m.def("reflect", [](const std::string& t, const IntVector& a, const IntVector& b) {
    return reflect(make_type(t), as_root(a), RelativeCycle(b)).coords;
  });
  m.def("coxeter_matrix", [](const std::string& t) { return rows(coxeter_matrix(make_type(t))); });
  m.def("monodromy_matrix", [](const std::string& t, const std::string& basis) {
    if (basis != "simple" && basis != "projective") throw py::value_error("basis must be 'simple' or 'projective'");
    return rows(monodromy_matrix(make_type(t), basis == "simple" ? Basis::Simple : Basis::Projective));
  }, py::arg("type"), py::arg("basis") = "simple");
  m.def("orbits", [](const std::string& t, const std::string& op) {
    if (op != "rho" && op != "rhobar") throw py::value_error("operator must be 'rho' or 'rhobar'");
    return from_json(orbit_decomposition(make_type(t), op == "rho" ? OrbitOperator::Monodromy : OrbitOperator::CoxeterBar)
                         .to_json());
  }, py::arg("type"), py::arg("operator") = "rho");
  m.def("fold", [](const std::string& label) { return rows(fold(classical_folding(label)).cartan); });

  m.def("lie_dimension", [](const std::string& t) { return LieAlgebra::build(make_type(t)).dimension(); });
  m.def("jacobi_violations", [](const std::string& t) {
    return check_jacobi(LieAlgebra::build(make_type(t))).violations.size();
  });
  m.def("killing_form", [](const std::string& t) { return rows(killing_form(LieAlgebra::build(make_type(t)))); });
  m.def("killing_nondegenerate", [](const std::string& t) {
    return is_nondegenerate(killing_form(LieAlgebra::build(make_type(t))));
  });
  m.def("n_sign", [](const std::string& t, const IntVector& a, const IntVector& b) {
    return n_sign(make_type(t), as_root(a), as_root(b));
  });
  m.def("sl2_verified", [](const std::string& t, const IntVector& a) {
    return sl2_triple(LieAlgebra::build(make_type(t)), as_root(a)).verified;
  });
  m.def("slk_model_check", &slk_model_check, py::arg("k"));
  m.def("structure_constants", [](const std::string& t) {
    return from_json(structure_constants_json(LieAlgebra::build(make_type(t))));
  });
  m.def("structure_constants_roundtrip", [](const py::object& doc) {
    return from_json(structure_constants_json(import_structure_constants(to_json(doc))));
  });

  m.def("segment_class", [](const std::string& t, int source, int target) {
    return segment_class(make_type(t), VertexSegment{source, target}).coords;
  });
  m.def("segment_classes", [](const std::string& label) {
    const LieType t = make_type(label);
    return from_json(segment_classes_json(t, enumerate_classes(t)));
  });
  m.def("d_geometric_sign", [](const std::string& t, const IntVector& a, const IntVector& b) {
    return d_geometric_sign(make_type(t), as_root(a), as_root(b));
  });
  m.def("rotation_angle", [](const std::string& t) {
    const auto r = rotation_angle(make_type(t));
    return py::module_::import("fractions").attr("Fraction")(r.numerator(), r.denominator());
  });

  m.def("project_roots", [](const std::string& t) {
    std::vector<std::pair<double, double>> out;
    for (const auto& p : project_all(make_type(t))) out.emplace_back(p.x, p.y);
    return out;
  });
  m.def("equivariance_residual", [](const std::string& t) { return equivariance_residual(make_type(t)); });
  m.def("projection_injective", [](const std::string& t) { return projection_injective(make_type(t)); });
  m.def("render_svg", [](const std::string& t, bool edges, bool colors, int size) {
    return render_svg(make_type(t), {edges, colors, size});
  }, py::arg("type"), py::arg("edges") = true, py::arg("colors") = true, py::arg("size") = 400);

  m.def("verify", [](const std::vector<std::string>& labels, bool foldings) {
    std::vector<LieType> types;
    for (const auto& l : labels) types.push_back(make_type(l));
    return from_json(run_verify(types, foldings).to_json());
  }, py::arg("types"), py::arg("foldings") = false);
}
