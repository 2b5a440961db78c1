#include "axial/group.hpp"

#include <algorithm>
#include <deque>

#include "axial/algebra.hpp"
#include "axial/error.hpp"

namespace axial {

Permutation::Permutation(std::vector<std::size_t> images) : images_(std::move(images)) {
  std::vector<bool> hit(images_.size(), false);
  for (std::size_t v : images_) {
    if (v >= images_.size() || hit[v]) throw Error(Errc::bad_parameter, "not a permutation");
    hit[v] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<std::size_t> images(degree);
  for (std::size_t i = 0; i < degree; ++i) images[i] = i;
  return Permutation(std::move(images));
}

std::size_t Permutation::apply(std::size_t x) const {
  if (x >= images_.size()) throw Error(Errc::bad_parameter, "point out of range");
  return images_[x];
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  if (degree() != rhs.degree()) throw Error(Errc::dimension_mismatch, "permutation degrees");
  std::vector<std::size_t> images(degree());
  for (std::size_t i = 0; i < degree(); ++i) images[i] = rhs.images_[images_[i]];
  return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
  std::vector<std::size_t> images(degree());
  for (std::size_t i = 0; i < degree(); ++i) images[images_[i]] = i;
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < degree(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

std::size_t Permutation::order() const {
  Permutation p = *this;
  std::size_t n = 1;
  while (!p.is_identity()) {
    p = p * *this;
    ++n;
    if (n > 1u << 20) throw Error(Errc::internal, "runaway permutation order");
  }
  return n;
}

GroupElement element_mul(const GroupElement& a, const GroupElement& b) {
  if (a.index() != b.index()) throw Error(Errc::bad_parameter, "mixed element kinds");
  if (std::holds_alternative<Permutation>(a)) {
    return std::get<Permutation>(a) * std::get<Permutation>(b);
  }
  // Matrices act on columns from the left, so "a then b" is B*A.
  return std::get<Matrix>(b) * std::get<Matrix>(a);
}

GroupElement element_inverse(const GroupElement& a) {
  if (std::holds_alternative<Permutation>(a)) return std::get<Permutation>(a).inverse();
  return inverse(std::get<Matrix>(a));
}

bool element_is_identity(const GroupElement& a) {
  if (std::holds_alternative<Permutation>(a)) return std::get<Permutation>(a).is_identity();
  return std::get<Matrix>(a).is_identity();
}

bool element_less(const GroupElement& a, const GroupElement& b) {
  if (std::holds_alternative<Permutation>(a)) {
    return std::get<Permutation>(a) < std::get<Permutation>(b);
  }
  return std::get<Matrix>(a) < std::get<Matrix>(b);
}

std::size_t element_order(const GroupElement& a) {
  GroupElement p = a;
  std::size_t n = 1;
  while (!element_is_identity(p)) {
    p = element_mul(p, a);
    ++n;
    if (n > 1u << 20) throw Error(Errc::internal, "runaway element order");
  }
  return n;
}

std::optional<std::size_t> EnumeratedGroup::index_of(const GroupElement& e) const {
  if (kind == GroupKind::permutation) {
    if (perm_index_.empty()) {
      for (std::size_t i = 0; i < elements.size(); ++i) {
        perm_index_.emplace(std::get<Permutation>(elements[i]), i);
      }
    }
    auto it = perm_index_.find(std::get<Permutation>(e));
    if (it == perm_index_.end()) return std::nullopt;
    return it->second;
  }
  if (matrix_index_.empty()) {
    for (std::size_t i = 0; i < elements.size(); ++i) {
      matrix_index_.emplace(std::get<Matrix>(elements[i]), i);
    }
  }
  auto it = matrix_index_.find(std::get<Matrix>(e));
  if (it == matrix_index_.end()) return std::nullopt;
  return it->second;
}

std::size_t EnumeratedGroup::mul(std::size_t a, std::size_t b) const {
  auto idx = index_of(element_mul(elements[a], elements[b]));
  if (!idx) throw Error(Errc::internal, "product left the enumerated set");
  return *idx;
}

std::size_t EnumeratedGroup::inv(std::size_t a) const {
  auto idx = index_of(element_inverse(elements[a]));
  if (!idx) throw Error(Errc::internal, "inverse left the enumerated set");
  return *idx;
}

std::size_t EnumeratedGroup::conj(std::size_t x, std::size_t by) const {
  return mul(mul(inv(by), x), by);
}

EnumeratedGroup enumerate(GroupKind kind, std::vector<std::string> labels,
                          std::vector<GroupElement> generators, std::size_t cap) {
  if (labels.size() != generators.size()) {
    throw Error(Errc::bad_parameter, "label/generator count mismatch");
  }
  EnumeratedGroup g;
  g.kind = kind;
  g.gen_labels = std::move(labels);
  g.generators = generators;

  GroupElement id;
  if (kind == GroupKind::permutation) {
    std::size_t degree = generators.empty() ? 0 : std::get<Permutation>(generators[0]).degree();
    id = Permutation::identity(degree);
  } else {
    std::size_t n = generators.empty() ? 0 : std::get<Matrix>(generators[0]).rows();
    id = Matrix::identity(n);
  }

  auto known = [&](const GroupElement& e) { return g.index_of(e).has_value(); };
  auto push = [&](GroupElement e, std::vector<std::size_t> word) {
    std::size_t idx = g.elements.size();
    if (kind == GroupKind::permutation) {
      g.perm_index_.emplace(std::get<Permutation>(e), idx);
    } else {
      g.matrix_index_.emplace(std::get<Matrix>(e), idx);
    }
    g.elements.push_back(std::move(e));
    g.words.push_back(std::move(word));
  };

  push(id, {});
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    std::size_t current = queue.front();
    queue.pop_front();
    for (std::size_t gi = 0; gi < g.generators.size(); ++gi) {
      GroupElement next = element_mul(g.elements[current], g.generators[gi]);
      if (known(next)) continue;
      if (g.elements.size() >= cap) {
        throw Error(Errc::cap_exceeded, "group closure exceeded cap");
      }
      std::vector<std::size_t> word = g.words[current];
      word.push_back(gi);
      queue.push_back(g.elements.size());
      push(std::move(next), std::move(word));
    }
  }
  return g;
}

std::vector<std::size_t> center(const EnumeratedGroup& g) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < g.order(); ++i) {
    bool commutes = true;
    for (const auto& gen : g.generators) {
      if (element_mul(g.elements[i], gen) != element_mul(gen, g.elements[i])) {
        commutes = false;
        break;
      }
    }
    if (commutes) out.push_back(i);
  }
  return out;
}

EnumeratedGroup centralizer(const EnumeratedGroup& g, const GroupElement& x) {
  if (!g.index_of(x)) throw Error(Errc::element_not_found, "element not in group");
  EnumeratedGroup out;
  out.kind = g.kind;
  for (std::size_t i = 0; i < g.order(); ++i) {
    if (element_mul(g.elements[i], x) == element_mul(x, g.elements[i])) {
      out.gen_labels.push_back("c" + std::to_string(out.elements.size()));
      out.generators.push_back(g.elements[i]);
      out.elements.push_back(g.elements[i]);
      out.words.push_back(g.words[i]);
    }
  }
  return out;
}

TTGReport is_3transposition(const EnumeratedGroup& g, const std::vector<std::size_t>& d) {
  TTGReport report;
  for (std::size_t i : d) {
    if (i >= g.order()) {
      report.witness = "index out of range";
      return report;
    }
    if (element_is_identity(g.elements[i]) || element_order(g.elements[i]) != 2) {
      report.witness = "element " + std::to_string(i) + " is not an involution";
      return report;
    }
  }
  // D generates.
  {
    std::vector<GroupElement> gens;
    std::vector<std::string> labels;
    for (std::size_t i : d) {
      gens.push_back(g.elements[i]);
      labels.push_back("d" + std::to_string(labels.size()));
    }
    if (d.empty()) {
      if (g.order() != 1) {
        report.witness = "empty class cannot generate";
        return report;
      }
    } else if (enumerate(g.kind, labels, gens, g.order() + 1).order() != g.order()) {
      report.witness = "class does not generate the group";
      return report;
    }
  }
  std::vector<bool> in_d(g.order(), false);
  for (std::size_t i : d) in_d[i] = true;
  for (std::size_t i : d) {
    for (std::size_t by = 0; by < g.order(); ++by) {
      if (!in_d[g.conj(i, by)]) {
        report.witness = "class not closed under conjugation by element " + std::to_string(by);
        return report;
      }
    }
  }
  for (std::size_t i : d) {
    for (std::size_t j : d) {
      std::size_t ord = element_order(element_mul(g.elements[i], g.elements[j]));
      if (ord > 3) {
        report.witness = "product of " + std::to_string(i) + " and " + std::to_string(j) +
                         " has order " + std::to_string(ord);
        return report;
      }
    }
  }
  report.ok = true;
  return report;
}

MiyamotoGroup miyamoto_group(const AxialAlgebra& aa, std::size_t cap) {
  if (!aa.rule.graded()) throw Error(Errc::no_grading, "miyamoto_group needs a grading");
  ClosureReport closure = miyamoto_closed(aa);
  if (!closure.ok) throw Error(Errc::not_closed, "axis set is not Miyamoto-closed");

  MiyamotoGroup out;
  for (std::size_t i = 0; i < aa.axes.size(); ++i) {
    out.axis_involutions.push_back(miyamoto_matrix(aa, i));
  }
  // Distinct matrices only; duplicated involutions collapse to one generator.
  std::vector<GroupElement> gens;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < out.axis_involutions.size(); ++i) {
    GroupElement e = out.axis_involutions[i];
    bool dup = false;
    for (const auto& seen : gens) {
      if (seen == e) {
        dup = true;
        break;
      }
    }
    if (!dup) {
      gens.push_back(std::move(e));
      labels.push_back("t_" + std::to_string(i));
    }
  }
  out.matrices = enumerate(GroupKind::matrix, labels, gens, cap);

  // When every involution permutes the basis vectors, expose the point action.
  const std::size_t n = aa.algebra.dim();
  bool permutes_basis = true;
  std::vector<GroupElement> perm_gens;
  for (const auto& gen : gens) {
    const Matrix& m = std::get<Matrix>(gen);
    std::vector<std::size_t> images(n, 0);
    for (std::size_t j = 0; j < n && permutes_basis; ++j) {
      std::size_t hits = 0;
      for (std::size_t i = 0; i < n; ++i) {
        const Rational& e = m.at(i, j);
        if (e == 0) continue;
        if (e != 1 || hits++ > 0) {
          permutes_basis = false;
          break;
        }
        images[j] = i;
      }
    }
    if (!permutes_basis) break;
    perm_gens.push_back(Permutation(images));
  }
  if (permutes_basis && !perm_gens.empty()) {
    out.point_action = enumerate(GroupKind::permutation, labels, perm_gens, cap);
  }
  return out;
}

ThreeTranspositionGroup f_map(const FischerSpace& fs) {
  std::vector<GroupElement> gens;
  std::vector<std::string> labels;
  for (std::size_t x = 0; x < fs.n_points(); ++x) {
    Permutation tau = point_tau(fs, x);
    if (tau.is_identity()) continue;
    bool dup = false;
    for (const auto& seen : gens) {
      if (std::get<Permutation>(seen) == tau) {
        dup = true;
        break;
      }
    }
    if (!dup) {
      labels.push_back("tau_" + fs.geometry().points[x]);
      gens.push_back(std::move(tau));
    }
  }
  ThreeTranspositionGroup out;
  out.group = enumerate(GroupKind::permutation, labels, gens);
  // The generator class is already conjugation-closed; close anyway.
  std::set<std::size_t> d;
  for (const auto& gen : gens) d.insert(*out.group.index_of(gen));
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::size_t> current(d.begin(), d.end());
    for (std::size_t i : current) {
      for (std::size_t by = 0; by < out.group.order(); ++by) {
        if (d.insert(out.group.conj(i, by)).second) grew = true;
      }
    }
  }
  out.d_class.assign(d.begin(), d.end());
  auto report = is_3transposition(out.group, out.d_class);
  if (!report.ok) throw Error(Errc::internal, "point maps failed: " + report.witness);
  return out;
}

PointLineGeometry g_map(const ThreeTranspositionGroup& t) {
  auto report = is_3transposition(t.group, t.d_class);
  if (!report.ok) {
    throw Error(Errc::bad_parameter, "not a 3-transposition group: " + report.witness);
  }
  PointLineGeometry g;
  std::vector<std::size_t> position(t.group.order(), 0);
  for (std::size_t i = 0; i < t.d_class.size(); ++i) {
    position[t.d_class[i]] = i;
    g.points.push_back("d" + std::to_string(i));
  }
  std::set<std::vector<std::size_t>> lines;
  for (std::size_t i = 0; i < t.d_class.size(); ++i) {
    for (std::size_t j = i + 1; j < t.d_class.size(); ++j) {
      std::size_t c = t.d_class[i];
      std::size_t d = t.d_class[j];
      std::size_t cd = t.group.mul(c, d);
      if (element_order(t.group.elements[cd]) == 3) {
        std::size_t third = t.group.conj(c, d);
        std::vector<std::size_t> line = {position[c], position[d], position[third]};
        std::sort(line.begin(), line.end());
        lines.insert(std::move(line));
      }
    }
  }
  g.lines.assign(lines.begin(), lines.end());
  auto fischer = is_fischer_space(g);
  if (!fischer.ok) throw Error(Errc::internal, "transposition geometry is not a Fischer space");
  return g;
}

ThreeTranspositionGroup center_reduce(const ThreeTranspositionGroup& t) {
  std::vector<std::size_t> z = center(t.group);
  std::vector<bool> central(t.group.order(), false);
  for (std::size_t i : z) central[i] = true;

  // Cosets of the center, represented by their sorted member lists.
  std::vector<std::size_t> coset_of(t.group.order(), static_cast<std::size_t>(-1));
  std::vector<std::size_t> coset_rep;
  for (std::size_t e = 0; e < t.group.order(); ++e) {
    if (coset_of[e] != static_cast<std::size_t>(-1)) continue;
    std::size_t id = coset_rep.size();
    coset_rep.push_back(e);
    for (std::size_t c : z) coset_of[t.group.mul(e, c)] = id;
  }
  const std::size_t n_cosets = coset_rep.size();

  // Right multiplication action of the quotient on the cosets.
  auto coset_perm = [&](std::size_t by) {
    std::vector<std::size_t> images(n_cosets);
    for (std::size_t c = 0; c < n_cosets; ++c) {
      images[c] = coset_of[t.group.mul(coset_rep[c], by)];
    }
    return Permutation(images);
  };

  std::vector<GroupElement> gens;
  std::vector<std::string> labels;
  std::set<std::size_t> d_cosets;
  for (std::size_t i : t.d_class) {
    if (central[i]) continue;
    d_cosets.insert(coset_of[i]);
  }
  for (std::size_t coset : d_cosets) {
    labels.push_back("d" + std::to_string(labels.size()));
    gens.push_back(coset_perm(coset_rep[coset]));
  }
  ThreeTranspositionGroup out;
  out.group = enumerate(GroupKind::permutation, labels, gens);
  for (const auto& gen : gens) out.d_class.push_back(*out.group.index_of(gen));
  std::sort(out.d_class.begin(), out.d_class.end());
  return out;
}

bool buekenhout_group_roundtrip(const ThreeTranspositionGroup& t) {
  // f(g(G,D)) is generated by the conjugation action of D on itself; the
  // canonical correspondence sends the central coset of d to that action.
  PointLineGeometry geometry = g_map(t);
  ThreeTranspositionGroup fg = f_map(FischerSpace(geometry));
  ThreeTranspositionGroup reduced = center_reduce(t);

  if (fg.group.order() != reduced.group.order()) return false;
  if (fg.d_class.size() != reduced.d_class.size()) return false;

  // The map d ↦ tau_d identifies the conjugation action on D with the
  // point maps of g(G,D); verify it is generator-by-generator consistent.
  std::vector<std::size_t> position(t.group.order(), 0);
  for (std::size_t i = 0; i < t.d_class.size(); ++i) position[t.d_class[i]] = i;
  for (std::size_t d : t.d_class) {
    std::vector<std::size_t> images(t.d_class.size());
    for (std::size_t i = 0; i < t.d_class.size(); ++i) {
      images[i] = position[t.group.conj(t.d_class[i], d)];
    }
    Permutation conj_action(images);
    Permutation tau = point_tau(FischerSpace(geometry), position[d]);
    if (!(conj_action == tau)) return false;
  }
  return true;
}

BuekenhoutReport buekenhout_roundtrip(const FischerSpace& fs) {
  BuekenhoutReport report;

  PointLineGeometry reduced = without_isolated(fs.geometry());
  FischerSpace fs0(reduced);
  ThreeTranspositionGroup f = f_map(fs0);
  PointLineGeometry gf = g_map(f);

  // Canonical map x ↦ tau_x from G° to g(f(G)).
  std::vector<std::size_t> position(f.group.order(), 0);
  for (std::size_t i = 0; i < f.d_class.size(); ++i) position[f.d_class[i]] = i;
  bool ok = reduced.n_points() == gf.n_points();
  std::vector<std::size_t> image(reduced.n_points(), 0);
  if (ok) {
    std::vector<bool> hit(gf.n_points(), false);
    for (std::size_t x = 0; x < reduced.n_points() && ok; ++x) {
      auto idx = f.group.index_of(point_tau(fs0, x));
      if (!idx) {
        ok = false;
        break;
      }
      image[x] = position[*idx];
      if (hit[image[x]]) ok = false;  // injective on points
      hit[image[x]] = true;
    }
  }
  if (ok) {
    std::set<std::vector<std::size_t>> gf_lines(gf.lines.begin(), gf.lines.end());
    std::set<std::vector<std::size_t>> mapped;
    for (const auto& line : reduced.lines) {
      std::vector<std::size_t> m;
      for (std::size_t p : line) m.push_back(image[p]);
      std::sort(m.begin(), m.end());
      mapped.insert(std::move(m));
    }
    ok = (mapped == gf_lines);
  }
  report.geometry_roundtrip = ok;
  report.group_roundtrip = buekenhout_group_roundtrip(f);
  return report;
}

bool unique_type_check(const AxialAlgebra& aa) {
  if (!aa.rule.graded()) throw Error(Errc::no_grading, "unique type needs a grading");
  std::vector<Matrix> taus;
  for (std::size_t i = 0; i < aa.axes.size(); ++i) taus.push_back(miyamoto_matrix(aa, i));
  for (std::size_t i = 0; i < taus.size(); ++i) {
    for (std::size_t j = i + 1; j < taus.size(); ++j) {
      if (taus[i] == taus[j]) return false;
    }
  }
  return true;
}

TransitivityReport transitivity_equivalences(const FischerSpace& fs) {
  for (std::size_t x = 0; x < fs.n_points(); ++x) {
    if (fs.is_isolated(x)) throw Error(Errc::has_isolated_points, "drop isolated points first");
  }
  TransitivityReport report;
  report.connected = is_connected(fs.geometry());

  ThreeTranspositionGroup f = f_map(fs);
  // Orbit of point 0 under the permutation group.
  if (fs.n_points() > 0) {
    std::vector<bool> seen(fs.n_points(), false);
    std::deque<std::size_t> queue{0};
    seen[0] = true;
    std::size_t count = 1;
    while (!queue.empty()) {
      std::size_t p = queue.front();
      queue.pop_front();
      for (const auto& gen : f.group.generators) {
        std::size_t q = std::get<Permutation>(gen).apply(p);
        if (!seen[q]) {
          seen[q] = true;
          ++count;
          queue.push_back(q);
        }
      }
    }
    report.transitive = (count == fs.n_points());
  } else {
    report.transitive = true;
  }

  // D is a single conjugacy class iff the orbit of one member under
  // conjugation is all of D.
  if (f.d_class.empty()) {
    report.d_single_class = true;
  } else {
    std::set<std::size_t> orbit{f.d_class.front()};
    std::deque<std::size_t> queue{f.d_class.front()};
    while (!queue.empty()) {
      std::size_t x = queue.front();
      queue.pop_front();
      for (std::size_t by = 0; by < f.group.order(); ++by) {
        std::size_t y = f.group.conj(x, by);
        if (orbit.insert(y).second) queue.push_back(y);
      }
    }
    report.d_single_class = (orbit.size() == f.d_class.size());
  }

  if (report.connected != report.transitive || report.transitive != report.d_single_class) {
    throw Error(Errc::internal, "transitivity statements disagree");
  }
  return report;
}

}  // namespace axial
