#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>

#include "axial/error.hpp"
#include "axial/json_io.hpp"

namespace py = pybind11;
using namespace axial;

namespace {

FischerSpace space_from(const std::string& geometry_json) {
  return FischerSpace(geometry_from_json(Json::parse(geometry_json)));
}

std::string catalog_json(const std::string& name, std::optional<int> n) {
  return geometry_to_json(catalog(name, n).geometry()).dump();
}

bool verify_fischer(const std::string& geometry_json) {
  PointLineGeometry g = geometry_from_json(Json::parse(geometry_json));
  if (!validate_partial_triple_system(g).ok) return false;
  return is_fischer_space(g).ok;
}

std::string matsuo_json(const std::string& geometry_json, const std::string& alpha) {
  MatsuoAlgebra ma = matsuo(space_from(geometry_json), parse_rational(alpha));
  return axial_algebra_to_json(ma.axial).dump();
}

bool fusion_check(const std::string& geometry_json, const std::string& alpha) {
  MatsuoAlgebra ma = matsuo(space_from(geometry_json), parse_rational(alpha));
  return check_axial(ma.axial).ok;
}

std::size_t miyamoto_order(const std::string& geometry_json, const std::string& alpha) {
  MatsuoAlgebra ma = matsuo(space_from(geometry_json), parse_rational(alpha));
  return miyamoto_group(ma.axial).matrices.order();
}

py::tuple universal_orders(const std::string& geometry_json, const std::string& alpha) {
  MatsuoAlgebra ma = matsuo(space_from(geometry_json), parse_rational(alpha));
  UniversalGroup u = todd_coxeter(build_presentation(ma.axial));
  TauReport tau = tau_epimorphism(u, ma.axial);
  return py::make_tuple(u.order(), tau.miyamoto_order, tau.kernel.size());
}

py::tuple eigenspace_dims(const std::string& geometry_json, const std::string& alpha,
                          const std::string& point) {
  FischerSpace fs = space_from(geometry_json);
  MatsuoEigenbasis basis =
      matsuo_eigenbasis(fs, parse_rational(alpha), fs.geometry().index_of(point));
  return py::make_tuple(basis.one.dim(), basis.zero.dim(), basis.alpha.dim());
}

std::string det_str(const std::string& matrix_json) {
  return rational_to_string(det(matrix_from_json(Json::parse(matrix_json))));
}

std::string rref_json(const std::string& matrix_json) {
  return matrix_to_json(rref(matrix_from_json(Json::parse(matrix_json)))).dump();
}

py::tuple frobenius_report(const std::string& geometry_json, const std::string& alpha_text) {
  FischerSpace fs = space_from(geometry_json);
  Rational alpha = parse_rational(alpha_text);
  MatsuoAlgebra ma = matsuo(fs, alpha);
  FrobeniusReport report = frobenius_check(ma.axial, frobenius_gram(fs, alpha));
  return py::make_tuple(report.associative, report.eigen_orthogonal, report.nondegenerate,
                        rational_to_string(report.gram_det));
}

py::tuple find_regular(const std::string& geometry_json, const std::string& alpha_text) {
  FischerSpace fs = space_from(geometry_json);
  Rational alpha = parse_rational(alpha_text);
  MatsuoAlgebra ma = matsuo(fs, alpha);
  UniversalGroup u = todd_coxeter(build_presentation(ma.axial));
  AlgebraModule reg = regular_module(ma.axial);
  Vec seed(reg.dim);
  seed[0] = 1;
  AveragedFamily family = averaged_family(reg, ma, u, 0, seed);
  RegularMapReport report = regular_map(reg, ma, family);
  return py::make_tuple(report.is_hom, report.injective, report.rank);
}

py::tuple ttg_check(const std::string& geometry_json) {
  UttgReport report = universal_ttg_check(space_from(geometry_json));
  return py::make_tuple(report.is_ttg, report.geometry_iso, report.u_order);
}

std::size_t clifford_miyamoto_order() {
  return miyamoto_group(clifford_example()).matrices.order();
}

}  // namespace

PYBIND11_MODULE(axialpy, m) {
  m.doc() = "Exact computations with Matsuo algebras over Fischer spaces";

  py::register_exception<Error>(m, "AxialError");

  m.def("catalog_json", &catalog_json, py::arg("name"), py::arg("n") = std::nullopt,
        "Built-in Fischer space as geometry JSON.");
  m.def("verify_fischer", &verify_fischer, py::arg("geometry_json"),
        "True iff the geometry is a Fischer space.");
  m.def("matsuo_json", &matsuo_json, py::arg("geometry_json"), py::arg("alpha"),
        "Matsuo algebra of the space as algebra JSON.");
  m.def("fusion_check", &fusion_check, py::arg("geometry_json"), py::arg("alpha"),
        "True iff every point is an axis for the three-eigenvalue rule.");
  m.def("miyamoto_order", &miyamoto_order, py::arg("geometry_json"), py::arg("alpha"));
  m.def("universal_orders", &universal_orders, py::arg("geometry_json"), py::arg("alpha"),
        "(group order, image order, kernel order) for the presented group.");
  m.def("eigenspace_dims", &eigenspace_dims, py::arg("geometry_json"), py::arg("alpha"),
        py::arg("point"), "(dim 1-eigenspace, dim 0-eigenspace, dim alpha-eigenspace).");
  m.def("det_str", &det_str, py::arg("matrix_json"), "Exact determinant as a string.");
  m.def("rref_json", &rref_json, py::arg("matrix_json"));
  m.def("frobenius_report", &frobenius_report, py::arg("geometry_json"), py::arg("alpha"),
        "(associative, eigen_orthogonal, nondegenerate, det).");
  m.def("find_regular", &find_regular, py::arg("geometry_json"), py::arg("alpha"),
        "(is_hom, injective, rank) of the averaged-family map on the regular module.");
  m.def("ttg_check", &ttg_check, py::arg("geometry_json"));
  m.def("clifford_miyamoto_order", &clifford_miyamoto_order);
}
