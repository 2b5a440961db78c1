#include "axial/module.hpp"

#include <algorithm>
#include <map>

#include "axial/error.hpp"

namespace axial {

Matrix AlgebraModule::action_of(const Vec& a) const {
  if (a.size() != actions.size()) {
    throw Error(Errc::dimension_mismatch, "algebra coordinate count");
  }
  Matrix out(dim, dim);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    const Matrix& action = actions[i];
    for (std::size_t r = 0; r < dim; ++r) {
      for (std::size_t c = 0; c < dim; ++c) {
        const Rational& e = action.at(r, c);
        if (e != 0) out.at(r, c) += a[i] * e;
      }
    }
  }
  return out;
}

namespace {

void check_shapes(const AlgebraModule& m, const AxialAlgebra& aa) {
  if (m.actions.size() != aa.algebra.dim()) {
    throw Error(Errc::dimension_mismatch, "one action per algebra basis element");
  }
  for (const auto& a : m.actions) {
    if (a.rows() != m.dim || a.cols() != m.dim) {
      throw Error(Errc::dimension_mismatch, "action matrix shape");
    }
  }
}

// Module eigenbasis rows per rule eigenvalue, or nothing when the
// decomposition at this axis fails.
std::optional<std::vector<std::vector<Vec>>> module_eigenbasis(const AlgebraModule& m,
                                                               const AxialAlgebra& aa,
                                                               const Vec& axis) {
  Matrix action = m.action_of(axis);
  std::vector<std::vector<Vec>> basis(aa.rule.size());
  std::size_t total = 0;
  for (std::size_t i = 0; i < aa.rule.size(); ++i) {
    Matrix shifted = action;
    for (std::size_t k = 0; k < m.dim; ++k) shifted.at(k, k) -= aa.rule.eigenvalue(i);
    Subspace s = kernel(shifted);
    basis[i] = s.basis_vectors();
    total += s.dim();
  }
  if (total != m.dim) return std::nullopt;
  return basis;
}

}  // namespace

ModuleReport check_module(const AlgebraModule& m, const AxialAlgebra& aa) {
  check_shapes(m, aa);
  ModuleReport report;
  for (std::size_t e = 0; e < aa.axes.size(); ++e) {
    const Vec& axis = aa.axes[e];
    Matrix action = m.action_of(axis);
    std::vector<Subspace> eig;
    std::size_t total = 0;
    for (std::size_t i = 0; i < aa.rule.size(); ++i) {
      Matrix shifted = action;
      for (std::size_t k = 0; k < m.dim; ++k) shifted.at(k, k) -= aa.rule.eigenvalue(i);
      eig.push_back(kernel(shifted));
      total += eig.back().dim();
    }
    if (total != m.dim) {
      report.witness = "eigenspaces at axis " + std::to_string(e) + " do not sum to the module";
      return report;
    }
    std::vector<std::vector<Vec>> algebra_basis(aa.rule.size());
    std::vector<std::vector<Matrix>> algebra_actions(aa.rule.size());
    for (std::size_t i = 0; i < aa.rule.size(); ++i) {
      algebra_basis[i] = eigenspace(aa.algebra, axis, aa.rule.eigenvalue(i)).basis_vectors();
      for (const auto& av : algebra_basis[i]) algebra_actions[i].push_back(m.action_of(av));
    }
    // Kernels are already canonical; only multi-eigenvalue star cells need a
    // fresh union span, cached per cell.
    std::map<std::vector<std::size_t>, Subspace> unions;
    auto target_for = [&](const std::vector<std::size_t>& cell) -> const Subspace& {
      auto it = unions.find(cell);
      if (it != unions.end()) return it->second;
      Subspace value = Subspace::zero(m.dim);
      if (cell.size() == 1) {
        value = eig[cell.front()];
      } else if (!cell.empty()) {
        std::vector<Vec> gens;
        for (std::size_t chi : cell) {
          for (auto& v : eig[chi].basis_vectors()) gens.push_back(std::move(v));
        }
        value = Subspace::span(m.dim, gens);
      }
      return unions.emplace(cell, std::move(value)).first->second;
    };
    for (std::size_t phi = 0; phi < aa.rule.size(); ++phi) {
      if (eig[phi].dim() == 0) continue;
      for (std::size_t psi = 0; psi < aa.rule.size(); ++psi) {
        if (algebra_basis[psi].empty()) continue;
        const Subspace& target = target_for(aa.rule.star(phi, psi));
        for (const auto& mv : eig[phi].basis_vectors()) {
          for (const auto& act : algebra_actions[psi]) {
            Vec product = act.apply(mv);
            if (!target.contains(product)) {
              report.witness = "fusion fails at axis " + std::to_string(e) + " for eigenvalues " +
                               rational_to_string(aa.rule.eigenvalue(phi)) + " and " +
                               rational_to_string(aa.rule.eigenvalue(psi));
              return report;
            }
          }
        }
      }
    }
  }
  report.ok = true;
  return report;
}

Subspace module_eigenspace(const AlgebraModule& m, const Vec& axis, const Rational& phi) {
  Matrix shifted = m.action_of(axis);
  for (std::size_t k = 0; k < m.dim; ++k) shifted.at(k, k) -= phi;
  return kernel(shifted);
}

Matrix mu_involution(const AlgebraModule& m, const AxialAlgebra& aa, std::size_t axis_index) {
  if (!aa.rule.graded()) throw Error(Errc::no_grading, "module involution needs a grading");
  if (axis_index >= aa.axes.size()) throw Error(Errc::bad_parameter, "axis index");
  auto basis = module_eigenbasis(m, aa, aa.axes[axis_index]);
  if (!basis) {
    throw Error(Errc::not_a_module,
                "module axioms fail at axis " + std::to_string(axis_index));
  }
  std::vector<Vec> columns;
  std::vector<int> signs;
  for (std::size_t i = 0; i < aa.rule.size(); ++i) {
    for (const auto& v : (*basis)[i]) {
      columns.push_back(v);
      signs.push_back(aa.rule.in_minus(i) ? -1 : 1);
    }
  }
  Matrix change(m.dim, m.dim);
  Matrix signed_change(m.dim, m.dim);
  for (std::size_t j = 0; j < m.dim; ++j) {
    for (std::size_t i = 0; i < m.dim; ++i) {
      change.at(i, j) = columns[j][i];
      signed_change.at(i, j) = signs[j] == 1 ? columns[j][i] : -columns[j][i];
    }
  }
  Matrix mu = signed_change * inverse(change);
  if (!(mu * mu).is_identity()) throw Error(Errc::internal, "module involution does not square");
  return mu;
}

GroupRepresentation module_to_rep(const AlgebraModule& m, const AxialAlgebra& aa,
                                  const UniversalGroup& u) {
  if (u.n_generators() != aa.axes.size()) {
    throw Error(Errc::bad_parameter, "generator/axis count mismatch");
  }
  GroupRepresentation rep;
  rep.dim = m.dim;
  rep.labels = u.generator_labels();
  for (std::size_t i = 0; i < aa.axes.size(); ++i) {
    rep.images.push_back(mu_involution(m, aa, i));
  }
  Presentation p = build_presentation(aa);
  for (const auto& relator : p.relators) {
    Matrix prod = Matrix::identity(m.dim);
    for (std::size_t g : relator) prod = rep.images[g] * prod;
    if (!prod.is_identity()) {
      throw Error(Errc::relator_violated, "module involutions violate a presentation relator");
    }
  }
  return rep;
}

AlgebraModule rep_to_module(const GroupRepresentation& rho, const Rational& alpha,
                            const MatsuoAlgebra& ma) {
  if (rho.images.size() != ma.space.n_points()) {
    throw Error(Errc::dimension_mismatch, "one image per point generator");
  }
  for (const auto& image : rho.images) {
    if (image.rows() != rho.dim || image.cols() != rho.dim) {
      throw Error(Errc::dimension_mismatch, "image shape");
    }
    if (!(image * image).is_identity()) {
      throw Error(Errc::bad_involution, "generator image is not an involution");
    }
  }
  AlgebraModule out;
  out.dim = rho.dim;
  const Matrix id = Matrix::identity(rho.dim);
  for (std::size_t x = 0; x < rho.images.size(); ++x) {
    out.actions.push_back((id - rho.images[x]).scaled(alpha / 2));
  }
  ModuleReport check = check_module(out, ma.axial);
  if (!check.ok) {
    throw Error(Errc::relator_violated,
                "images do not define a module; the representation violates the presentation");
  }
  return out;
}

bool roundtrip_check(const AlgebraModule& m, const MatsuoAlgebra& ma, const UniversalGroup& u) {
  // check_module(m, ma.axial) is a precondition; module_to_rep and the
  // rebuild below both fail loudly on a non-module.
  for (std::size_t x = 0; x < ma.axial.axes.size(); ++x) {
    if (module_eigenspace(m, ma.axial.axes[x], Rational(1)).dim() != 0) {
      throw Error(Errc::nontrivial_one_eigenspace,
                  "axis " + std::to_string(x) + " has a nontrivial 1-eigenspace");
    }
  }
  GroupRepresentation rep = module_to_rep(m, ma.axial, u);
  AlgebraModule back = rep_to_module(rep, ma.alpha, ma);
  return back.actions == m.actions && back.dim == m.dim;
}

AlgebraModule regular_module(const AxialAlgebra& aa) {
  AlgebraModule out;
  out.dim = aa.algebra.dim();
  for (std::size_t i = 0; i < aa.algebra.dim(); ++i) {
    Vec basis_i(aa.algebra.dim());
    basis_i[i] = 1;
    out.actions.push_back(aa.algebra.ad(basis_i));
  }
  return out;
}

bool frobenius_module_check(const AlgebraModule& m, const ModuleForm& form,
                            const AxialAlgebra& aa) {
  check_shapes(m, aa);
  if (form.gram.rows() != m.dim || form.gram.cols() != m.dim) {
    throw Error(Errc::dimension_mismatch, "form shape");
  }
  for (const auto& action : m.actions) {
    if (!(action.transpose() * form.gram == form.gram * action)) return false;
  }
  return true;
}

Subspace maschke_complement(const AlgebraModule& m, const ModuleForm& form, const Subspace& n,
                            const AxialAlgebra& aa) {
  check_shapes(m, aa);
  if (n.ambient_dim() != m.dim) throw Error(Errc::ambient_mismatch, "submodule ambient");
  for (const auto& action : m.actions) {
    for (const auto& v : n.basis_vectors()) {
      if (!n.contains(action.apply(v))) {
        throw Error(Errc::not_a_submodule, "subspace is not closed under the action");
      }
    }
  }
  if (!frobenius_module_check(m, form, aa)) {
    throw Error(Errc::bad_parameter, "form is not a module form");
  }
  // Gram of the form restricted to n.
  Matrix restricted(n.dim(), n.dim());
  auto basis = n.basis_vectors();
  for (std::size_t i = 0; i < n.dim(); ++i) {
    Vec gi = form.gram.apply(basis[i]);
    for (std::size_t j = 0; j < n.dim(); ++j) {
      Rational s = 0;
      for (std::size_t k = 0; k < m.dim; ++k) s += basis[j][k] * gi[k];
      restricted.at(i, j) = s;
    }
  }
  if (det(restricted) == 0) {
    throw Error(Errc::degenerate_on_n, "form is degenerate on the submodule");
  }
  Subspace complement = kernel(n.basis() * form.gram);
  for (const auto& action : m.actions) {
    for (const auto& v : complement.basis_vectors()) {
      if (!complement.contains(action.apply(v))) {
        throw Error(Errc::internal, "orthogonal complement is not a submodule");
      }
    }
  }
  if (complement.dim() + n.dim() != m.dim ||
      subspace_intersection(complement, n).dim() != 0) {
    throw Error(Errc::internal, "complement does not split the module");
  }
  return complement;
}

namespace {

Matrix element_matrix(const UniversalGroup& u, const std::vector<Matrix>& gen_images,
                      std::size_t element, std::size_t dim) {
  Matrix m = Matrix::identity(dim);
  for (std::size_t g : u.word_of(element)) m = gen_images[g] * m;
  return m;
}

}  // namespace

AveragedFamily averaged_family(const AlgebraModule& m, const MatsuoAlgebra& ma,
                               const UniversalGroup& u, std::size_t x, const Vec& seed) {
  const FischerSpace& fs = ma.space;
  if (!is_connected(fs.geometry())) {
    throw Error(Errc::not_connected, "averaging needs a connected space");
  }
  for (std::size_t p = 0; p < fs.n_points(); ++p) {
    if (fs.is_isolated(p)) throw Error(Errc::has_isolated_points, "isolated point");
  }
  if (x >= fs.n_points()) throw Error(Errc::unknown_point, "axis point out of range");
  if (seed.size() != m.dim || vec_is_zero(seed)) {
    throw Error(Errc::seed_not_one_eigenvector, "seed must be a nonzero vector");
  }
  if (m.actions[x].apply(seed) != seed) {
    throw Error(Errc::seed_not_one_eigenvector, "seed is not a 1-eigenvector of the axis");
  }

  std::vector<Matrix> mu;
  for (std::size_t p = 0; p < fs.n_points(); ++p) mu.push_back(mu_involution(m, ma.axial, p));

  const std::size_t tx = u.generator_element(x);
  std::map<Matrix, bool> u_x;
  for (std::size_t e = 0; e < u.order(); ++e) {
    if (u.mul(e, tx) == u.mul(tx, e)) {
      u_x.emplace(element_matrix(u, mu, e, m.dim), true);
    }
  }
  Vec m_x(m.dim);
  for (const auto& [mat, _] : u_x) m_x = vec_add(m_x, mat.apply(seed));

  AveragedFamily family;
  family.x = x;
  family.u_x_order = u_x.size();
  family.m_points.assign(fs.n_points(), Vec(m.dim));
  family.m_points[x] = m_x;

  for (std::size_t y = 0; y < fs.n_points(); ++y) {
    if (y == x) continue;
    const std::size_t ty = u.generator_element(y);
    bool found = false;
    for (std::size_t t : u.bfs_order()) {
      if (u.conj(tx, t) == ty) {
        family.m_points[y] = element_matrix(u, mu, t, m.dim).apply(m_x);
        found = true;
        break;
      }
    }
    if (!found) throw Error(Errc::internal, "conjugation action is not transitive");
  }

  for (std::size_t y = 0; y < fs.n_points(); ++y) {
    if (m.actions[y].apply(family.m_points[y]) != family.m_points[y]) {
      throw Error(Errc::internal, "averaged vector left the 1-eigenspace");
    }
  }
  // Equivariance on the generators extends to the whole group.
  for (std::size_t g = 0; g < fs.n_points(); ++g) {
    Permutation tau = point_tau(fs, g);
    for (std::size_t y = 0; y < fs.n_points(); ++y) {
      if (mu[g].apply(family.m_points[y]) != family.m_points[tau.apply(y)]) {
        throw Error(Errc::internal, "averaged family is not equivariant");
      }
    }
  }
  return family;
}

RegularMapReport regular_map(const AlgebraModule& m, const MatsuoAlgebra& ma,
                             const AveragedFamily& family) {
  const FischerSpace& fs = ma.space;
  const std::size_t n = fs.n_points();
  RegularMapReport report;
  report.hom = Matrix(m.dim, n);
  for (std::size_t y = 0; y < n; ++y) {
    for (std::size_t i = 0; i < m.dim; ++i) report.hom.at(i, y) = family.m_points[y][i];
  }

  report.is_hom = true;
  const Rational& alpha = ma.alpha;
  for (std::size_t z = 0; z < n && report.is_hom; ++z) {
    const Matrix& act_z = m.actions[z];
    if (act_z.apply(family.m_points[z]) != family.m_points[z]) {
      report.is_hom = false;
      break;
    }
    for (std::size_t y = 0; y < n; ++y) {
      if (y == z) continue;
      if (!fs.collinear(y, z)) {
        if (!vec_is_zero(act_z.apply(family.m_points[y]))) {
          report.is_hom = false;
          break;
        }
        continue;
      }
      std::size_t w = fs.wedge(y, z);
      Vec zero_part = vec_sub(vec_add(family.m_points[y], family.m_points[w]),
                              vec_scaled(family.m_points[z], alpha));
      if (!vec_is_zero(act_z.apply(zero_part))) {
        report.is_hom = false;
        break;
      }
      Vec alpha_part = vec_sub(family.m_points[y], family.m_points[w]);
      if (act_z.apply(alpha_part) != vec_scaled(alpha_part, alpha)) {
        report.is_hom = false;
        break;
      }
    }
  }

  report.rank = rank(report.hom);
  report.injective = (report.rank == n);

  if (!vec_is_zero(family.m_points[family.x])) {
    Matrix gram = frobenius_gram(fs, alpha);
    if (det(gram) != 0 && !report.injective) {
      throw Error(Errc::internal, "nondegenerate form demands an injective map");
    }
  }
  return report;
}

std::vector<std::size_t> seed_sweep(const AlgebraModule& m, const MatsuoAlgebra& ma,
                                    const UniversalGroup& u, std::size_t x) {
  Vec axis(ma.axial.algebra.dim());
  axis[x] = 1;
  Subspace one = module_eigenspace(m, axis, Rational(1));
  std::vector<Matrix> mu;
  for (std::size_t p = 0; p < ma.space.n_points(); ++p) {
    mu.push_back(mu_involution(m, ma.axial, p));
  }
  const std::size_t tx = u.generator_element(x);
  std::vector<Matrix> u_x;
  {
    std::map<Matrix, bool> dedup;
    for (std::size_t e = 0; e < u.order(); ++e) {
      if (u.mul(e, tx) == u.mul(tx, e)) {
        dedup.emplace(element_matrix(u, mu, e, m.dim), true);
      }
    }
    for (const auto& [mat, _] : dedup) u_x.push_back(mat);
  }
  std::vector<std::size_t> nonzero;
  auto basis = one.basis_vectors();
  for (std::size_t i = 0; i < basis.size(); ++i) {
    Vec sum(m.dim);
    for (const auto& mat : u_x) sum = vec_add(sum, mat.apply(basis[i]));
    if (!vec_is_zero(sum)) nonzero.push_back(i);
  }
  return nonzero;
}

std::vector<MatsuoAlgebra> component_decompose(const MatsuoAlgebra& ma) {
  const PointLineGeometry& g = ma.space.geometry();
  Components parts = connected_components(g);

  // Factors in original point order: each component, then each isolated
  // point as a 1-dimensional algebra.
  std::vector<std::vector<std::size_t>> factors;
  for (const auto& comp : parts.components) {
    std::vector<std::size_t> idx;
    for (const auto& label : comp.points) idx.push_back(g.index_of(label));
    factors.push_back(std::move(idx));
  }
  for (std::size_t p : parts.isolated) factors.push_back({p});

  // Cross-component products must vanish.
  std::vector<std::size_t> owner(g.n_points(), 0);
  for (std::size_t f = 0; f < factors.size(); ++f) {
    for (std::size_t p : factors[f]) owner[p] = f;
  }
  for (std::size_t i = 0; i < g.n_points(); ++i) {
    for (std::size_t j = 0; j < g.n_points(); ++j) {
      if (owner[i] != owner[j] && !vec_is_zero(ma.axial.algebra.products[i][j])) {
        throw Error(Errc::internal, "cross-component product does not vanish");
      }
    }
  }

  std::vector<MatsuoAlgebra> out;
  for (const auto& idx : factors) {
    std::vector<bool> member(g.n_points(), false);
    for (std::size_t p : idx) member[p] = true;
    std::vector<std::string> labels;
    for (std::size_t p : idx) labels.push_back(g.points[p]);
    std::vector<std::size_t> remap(g.n_points(), 0);
    for (std::size_t k = 0; k < idx.size(); ++k) remap[idx[k]] = k;
    std::vector<std::vector<std::string>> lines;
    for (const auto& line : g.lines) {
      if (member[line.front()]) {
        std::vector<std::string> l;
        for (std::size_t p : line) l.push_back(g.points[p]);
        lines.push_back(std::move(l));
      }
    }
    FischerSpace sub(PointLineGeometry::from_labels(labels, lines));
    out.push_back(matsuo(sub, ma.alpha));
  }
  return out;
}

AlgebraModule quotient_module(const AlgebraModule& m, const Subspace& n) {
  if (n.ambient_dim() != m.dim) throw Error(Errc::ambient_mismatch, "submodule ambient");
  for (const auto& action : m.actions) {
    for (const auto& v : n.basis_vectors()) {
      if (!n.contains(action.apply(v))) {
        throw Error(Errc::not_a_submodule, "subspace is not closed under the action");
      }
    }
  }
  // Quotient coordinates: the standard coordinates away from the pivots of n.
  std::vector<bool> is_pivot(m.dim, false);
  for (std::size_t i = 0; i < n.dim(); ++i) {
    std::size_t j = 0;
    while (j < m.dim && n.basis().at(i, j) == 0) ++j;
    is_pivot[j] = true;
  }
  std::vector<std::size_t> free;
  for (std::size_t j = 0; j < m.dim; ++j) {
    if (!is_pivot[j]) free.push_back(j);
  }

  auto project = [&](Vec v) {
    // Reduce modulo n, then read off the free coordinates.
    for (std::size_t i = 0; i < n.dim(); ++i) {
      std::size_t pivot = 0;
      while (pivot < m.dim && n.basis().at(i, pivot) == 0) ++pivot;
      if (v[pivot] == 0) continue;
      const Rational factor = v[pivot];
      for (std::size_t j = pivot; j < m.dim; ++j) v[j] -= factor * n.basis().at(i, j);
    }
    Vec out(free.size());
    for (std::size_t k = 0; k < free.size(); ++k) out[k] = v[free[k]];
    return out;
  };

  AlgebraModule out;
  out.dim = free.size();
  for (const auto& action : m.actions) {
    Matrix q(out.dim, out.dim);
    for (std::size_t k = 0; k < free.size(); ++k) {
      Vec e(m.dim);
      e[free[k]] = 1;
      Vec image = project(action.apply(e));
      for (std::size_t i = 0; i < out.dim; ++i) q.at(i, k) = image[i];
    }
    out.actions.push_back(std::move(q));
  }
  return out;
}

AlgebraModule direct_sum(const AlgebraModule& a, const AlgebraModule& b) {
  if (a.actions.size() != b.actions.size()) {
    throw Error(Errc::dimension_mismatch, "summands over different algebras");
  }
  AlgebraModule out;
  out.dim = a.dim + b.dim;
  for (std::size_t k = 0; k < a.actions.size(); ++k) {
    Matrix block(out.dim, out.dim);
    for (std::size_t i = 0; i < a.dim; ++i) {
      for (std::size_t j = 0; j < a.dim; ++j) block.at(i, j) = a.actions[k].at(i, j);
    }
    for (std::size_t i = 0; i < b.dim; ++i) {
      for (std::size_t j = 0; j < b.dim; ++j) {
        block.at(a.dim + i, a.dim + j) = b.actions[k].at(i, j);
      }
    }
    out.actions.push_back(std::move(block));
  }
  return out;
}

}  // namespace axial
