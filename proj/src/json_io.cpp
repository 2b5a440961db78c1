#include "axial/json_io.hpp"

#include "axial/error.hpp"

namespace axial {

namespace {

void expect(bool condition, const std::string& what) {
  if (!condition) throw Error(Errc::parse_error, what);
}

}  // namespace

Json rational_to_json(const Rational& r) { return rational_to_string(r); }

Rational rational_from_json(const Json& j) {
  expect(j.is_string(), "rational must be a string");
  return parse_rational(j.get<std::string>());
}

Json vec_to_json(const Vec& v) {
  Json out = Json::array();
  for (const auto& e : v) out.push_back(rational_to_json(e));
  return out;
}

Vec vec_from_json(const Json& j) {
  expect(j.is_array(), "vector must be an array");
  Vec out;
  for (const auto& e : j) out.push_back(rational_from_json(e));
  return out;
}

Json matrix_to_json(const Matrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(vec_to_json(m.row(i)));
  return out;
}

Matrix matrix_from_json(const Json& j) {
  expect(j.is_array(), "matrix must be an array of rows");
  std::vector<Vec> rows;
  for (const auto& r : j) rows.push_back(vec_from_json(r));
  return Matrix::from_rows(rows);
}

Json geometry_to_json(const PointLineGeometry& g) {
  Json out;
  out["points"] = g.points;
  Json lines = Json::array();
  for (const auto& line : g.lines) {
    Json l = Json::array();
    for (std::size_t p : line) l.push_back(g.points[p]);
    lines.push_back(std::move(l));
  }
  out["lines"] = std::move(lines);
  return out;
}

PointLineGeometry geometry_from_json(const Json& j) {
  expect(j.is_object() && j.contains("points") && j.contains("lines"),
         "geometry needs points and lines");
  std::vector<std::string> points = j.at("points").get<std::vector<std::string>>();
  std::vector<std::vector<std::string>> lines;
  for (const auto& line : j.at("lines")) {
    lines.push_back(line.get<std::vector<std::string>>());
  }
  return PointLineGeometry::from_labels(std::move(points), lines);
}

Json fusion_rule_to_json(const FusionRule& rule) {
  Json out;
  Json eigenvalues = Json::array();
  for (const auto& v : rule.eigenvalues()) eigenvalues.push_back(rational_to_json(v));
  out["eigenvalues"] = std::move(eigenvalues);
  Json star = Json::object();
  for (std::size_t i = 0; i < rule.size(); ++i) {
    for (std::size_t j = i; j < rule.size(); ++j) {
      std::string key =
          rational_to_string(rule.eigenvalue(i)) + "|" + rational_to_string(rule.eigenvalue(j));
      Json cell = Json::array();
      for (std::size_t k : rule.star(i, j)) cell.push_back(rational_to_json(rule.eigenvalue(k)));
      star[key] = std::move(cell);
    }
  }
  out["star"] = std::move(star);
  if (rule.graded()) {
    Json plus = Json::array();
    for (std::size_t i : rule.plus()) plus.push_back(rational_to_json(rule.eigenvalue(i)));
    Json minus = Json::array();
    for (std::size_t i : rule.minus()) minus.push_back(rational_to_json(rule.eigenvalue(i)));
    out["plus"] = std::move(plus);
    out["minus"] = std::move(minus);
  }
  return out;
}

FusionRule fusion_rule_from_json(const Json& j) {
  expect(j.is_object() && j.contains("eigenvalues") && j.contains("star"),
         "fusion rule needs eigenvalues and star");
  std::vector<Rational> eigenvalues;
  for (const auto& v : j.at("eigenvalues")) eigenvalues.push_back(rational_from_json(v));
  const std::size_t n = eigenvalues.size();
  auto index_of = [&](const Rational& v) {
    for (std::size_t i = 0; i < n; ++i) {
      if (eigenvalues[i] == v) return i;
    }
    throw Error(Errc::parse_error, "star names an unknown eigenvalue");
  };
  std::vector<std::vector<std::vector<std::size_t>>> star(
      n, std::vector<std::vector<std::size_t>>(n));
  for (const auto& [key, cell] : j.at("star").items()) {
    auto bar = key.find('|');
    expect(bar != std::string::npos, "star key must be 'a|b'");
    std::size_t a = index_of(parse_rational(key.substr(0, bar)));
    std::size_t b = index_of(parse_rational(key.substr(bar + 1)));
    std::vector<std::size_t> entry;
    for (const auto& v : cell) entry.push_back(index_of(rational_from_json(v)));
    star[a][b] = entry;
    star[b][a] = entry;
  }
  // Resolve grading indices before eigenvalues are moved into the rule.
  std::optional<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> grading;
  if (j.contains("plus") || j.contains("minus")) {
    expect(j.contains("plus") && j.contains("minus"), "grading needs both parts");
    std::vector<std::size_t> plus;
    for (const auto& v : j.at("plus")) plus.push_back(index_of(rational_from_json(v)));
    std::vector<std::size_t> minus;
    for (const auto& v : j.at("minus")) minus.push_back(index_of(rational_from_json(v)));
    grading = {std::move(plus), std::move(minus)};
  }
  FusionRule rule(std::move(eigenvalues), std::move(star));
  if (grading) rule.set_grading(std::move(grading->first), std::move(grading->second));
  return rule;
}

Json axial_algebra_to_json(const AxialAlgebra& aa) {
  Json out;
  out["basis"] = aa.algebra.basis;
  Json products = Json::array();
  for (const auto& row : aa.algebra.products) {
    Json r = Json::array();
    for (const auto& cell : row) r.push_back(vec_to_json(cell));
    products.push_back(std::move(r));
  }
  out["products"] = std::move(products);
  Json axes = Json::array();
  for (const auto& axis : aa.axes) axes.push_back(vec_to_json(axis));
  out["axes"] = std::move(axes);
  out["rule"] = fusion_rule_to_json(aa.rule);
  return out;
}

AxialAlgebra axial_algebra_from_json(const Json& j) {
  expect(j.is_object() && j.contains("basis") && j.contains("products") && j.contains("axes") &&
             j.contains("rule"),
         "algebra needs basis, products, axes, rule");
  Algebra alg;
  alg.basis = j.at("basis").get<std::vector<std::string>>();
  for (const auto& row : j.at("products")) {
    std::vector<Vec> r;
    for (const auto& cell : row) r.push_back(vec_from_json(cell));
    alg.products.push_back(std::move(r));
  }
  alg.check_commutative();
  std::vector<Vec> axes;
  for (const auto& axis : j.at("axes")) axes.push_back(vec_from_json(axis));
  return AxialAlgebra{std::move(alg), std::move(axes), fusion_rule_from_json(j.at("rule"))};
}

Json group_to_json(const EnumeratedGroup& g, const std::vector<std::string>& domain) {
  Json out;
  out["kind"] = g.kind == GroupKind::permutation ? "permutation" : "matrix";
  out["order"] = g.order();
  out["domain"] = domain;
  Json gens = Json::object();
  for (std::size_t i = 0; i < g.generators.size(); ++i) {
    if (g.kind == GroupKind::permutation) {
      gens[g.gen_labels[i]] = std::get<Permutation>(g.generators[i]).images();
    } else {
      gens[g.gen_labels[i]] = matrix_to_json(std::get<Matrix>(g.generators[i]));
    }
  }
  out["generators"] = std::move(gens);
  return out;
}

Json presentation_to_json(const Presentation& p) {
  Json out;
  out["generators"] = p.generators;
  Json relators = Json::array();
  for (const auto& relator : p.relators) {
    Json word = Json::array();
    for (std::size_t g : relator) word.push_back(p.generators[g]);
    relators.push_back(std::move(word));
  }
  out["relators"] = std::move(relators);
  return out;
}

Presentation presentation_from_json(const Json& j) {
  expect(j.is_object() && j.contains("generators") && j.contains("relators"),
         "presentation needs generators and relators");
  Presentation p;
  p.generators = j.at("generators").get<std::vector<std::string>>();
  auto index_of = [&](const std::string& label) {
    for (std::size_t i = 0; i < p.generators.size(); ++i) {
      if (p.generators[i] == label) return i;
    }
    throw Error(Errc::parse_error, "relator names unknown generator '" + label + "'");
  };
  for (const auto& word : j.at("relators")) {
    std::vector<std::size_t> relator;
    for (const auto& label : word) relator.push_back(index_of(label.get<std::string>()));
    p.relators.push_back(std::move(relator));
  }
  return p;
}

Json module_to_json(const AlgebraModule& m, const std::vector<std::string>& labels) {
  expect(labels.size() == m.actions.size(), "one label per action");
  Json out;
  out["dim"] = m.dim;
  Json actions = Json::object();
  for (std::size_t i = 0; i < m.actions.size(); ++i) {
    actions[labels[i]] = matrix_to_json(m.actions[i]);
  }
  out["actions"] = std::move(actions);
  return out;
}

AlgebraModule module_from_json(const Json& j, const std::vector<std::string>& labels) {
  expect(j.is_object() && j.contains("dim") && j.contains("actions"),
         "module needs dim and actions");
  AlgebraModule m;
  m.dim = j.at("dim").get<std::size_t>();
  for (const auto& label : labels) {
    expect(j.at("actions").contains(label), "missing action for '" + label + "'");
    m.actions.push_back(matrix_from_json(j.at("actions").at(label)));
  }
  return m;
}

Json representation_to_json(const GroupRepresentation& rho) {
  Json out;
  out["dim"] = rho.dim;
  Json images = Json::object();
  for (std::size_t i = 0; i < rho.images.size(); ++i) {
    images[rho.labels[i]] = matrix_to_json(rho.images[i]);
  }
  out["images"] = std::move(images);
  return out;
}

GroupRepresentation representation_from_json(const Json& j,
                                             const std::vector<std::string>& labels) {
  expect(j.is_object() && j.contains("dim") && j.contains("images"),
         "representation needs dim and images");
  GroupRepresentation rho;
  rho.dim = j.at("dim").get<std::size_t>();
  rho.labels = labels;
  for (const auto& label : labels) {
    expect(j.at("images").contains(label), "missing image for '" + label + "'");
    rho.images.push_back(matrix_from_json(j.at("images").at(label)));
  }
  return rho;
}

}  // namespace axial
