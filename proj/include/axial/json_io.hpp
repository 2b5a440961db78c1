#pragma once

#include <json.hpp>

#include "axial/algebra.hpp"
#include "axial/geometry.hpp"
#include "axial/group.hpp"
#include "axial/module.hpp"
#include "axial/universal.hpp"

namespace axial {

using Json = nlohmann::json;

// Rationals travel as strings ("p/q" or "p") so downstream tools never
// coerce them to floats.

Json rational_to_json(const Rational& r);
Rational rational_from_json(const Json& j);

Json vec_to_json(const Vec& v);
Vec vec_from_json(const Json& j);

Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

Json geometry_to_json(const PointLineGeometry& g);
PointLineGeometry geometry_from_json(const Json& j);

Json fusion_rule_to_json(const FusionRule& rule);
FusionRule fusion_rule_from_json(const Json& j);

Json axial_algebra_to_json(const AxialAlgebra& aa);
AxialAlgebra axial_algebra_from_json(const Json& j);

Json group_to_json(const EnumeratedGroup& g, const std::vector<std::string>& domain);
Json presentation_to_json(const Presentation& p);
Presentation presentation_from_json(const Json& j);

Json module_to_json(const AlgebraModule& m, const std::vector<std::string>& labels);
AlgebraModule module_from_json(const Json& j, const std::vector<std::string>& labels);

Json representation_to_json(const GroupRepresentation& rho);
GroupRepresentation representation_from_json(const Json& j,
                                             const std::vector<std::string>& labels);

}  // namespace axial
