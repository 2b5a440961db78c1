#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "axial/algebra.hpp"
#include "axial/subspace.hpp"
#include "axial/universal.hpp"

namespace axial {

// Right action of the algebra on a vector space: one dim x dim matrix per
// algebra basis element; the action of a general algebra vector is the
// matching linear combination.
struct AlgebraModule {
  std::size_t dim = 0;
  std::vector<Matrix> actions;

  Matrix action_of(const Vec& a) const;
};

struct GroupRepresentation {
  std::size_t dim = 0;
  std::vector<std::string> labels;  // generator labels, in axis order
  std::vector<Matrix> images;
};

struct ModuleForm {
  Matrix gram;
};

struct ModuleReport {
  bool ok = false;
  std::string witness;
};

/// For each axis: the module eigenspaces over the rule's eigenvalues sum
/// directly to the module, and eigenvector products land in the star span.
ModuleReport check_module(const AlgebraModule& m, const AxialAlgebra& aa);

Subspace module_eigenspace(const AlgebraModule& m, const Vec& axis, const Rational& phi);

/// +1 on the plus-graded part, -1 on the minus part of the axis eigenspace
/// decomposition. Throws Errc::not_a_module when the decomposition fails.
Matrix mu_involution(const AlgebraModule& m, const AxialAlgebra& aa, std::size_t axis_index);

/// Images of the generators t_e are the module involutions; every relator of
/// the presentation must evaluate to the identity.
/// Throws Errc::relator_violated.
GroupRepresentation module_to_rep(const AlgebraModule& m, const AxialAlgebra& aa,
                                  const UniversalGroup& u);

/// Point x acts as (alpha/2)(I - rho(t_x)): zero on the +1-eigenspace and
/// alpha on the -1-eigenspace. Throws Errc::bad_involution.
AlgebraModule rep_to_module(const GroupRepresentation& rho, const Rational& alpha,
                            const MatsuoAlgebra& ma);

/// rep_to_module(module_to_rep(m)) returns m exactly when every 1-eigenspace
/// is trivial. Throws Errc::nontrivial_one_eigenspace otherwise.
bool roundtrip_check(const AlgebraModule& m, const MatsuoAlgebra& ma, const UniversalGroup& u);

/// The algebra acting on itself by multiplication.
AlgebraModule regular_module(const AxialAlgebra& aa);

/// ⟨m·a, n⟩ = ⟨m, n·a⟩ on all basis triples.
bool frobenius_module_check(const AlgebraModule& m, const ModuleForm& form,
                            const AxialAlgebra& aa);

/// Orthogonal complement of a submodule on which the form is nondegenerate;
/// the result is again a submodule and complements n.
/// Throws Errc::not_a_submodule / Errc::degenerate_on_n.
Subspace maschke_complement(const AlgebraModule& m, const ModuleForm& form, const Subspace& n,
                            const AxialAlgebra& aa);

struct AveragedFamily {
  std::size_t x = 0;
  std::vector<Vec> m_points;  // one vector per point of the space
  std::size_t u_x_order = 0;
};

/// Sums a 1-eigenvector seed at x over the image in GL(M) of the centralizer
/// of t_x, then spreads it over all points along the conjugation action.
/// Throws Errc::not_connected / Errc::seed_not_one_eigenvector.
AveragedFamily averaged_family(const AlgebraModule& m, const MatsuoAlgebra& ma,
                               const UniversalGroup& u, std::size_t x, const Vec& seed);

struct RegularMapReport {
  Matrix hom;  // dim x n_points, column y = m_y
  bool is_hom = false;
  bool injective = false;
  std::size_t rank = 0;
};

/// The linear map y ↦ m_y out of the regular module; verified through the
/// four point-pair relations, injective iff full rank.
RegularMapReport regular_map(const AlgebraModule& m, const MatsuoAlgebra& ma,
                             const AveragedFamily& family);

/// Which standard 1-eigenbasis seeds at x give a nonzero averaged sum.
std::vector<std::size_t> seed_sweep(const AlgebraModule& m, const MatsuoAlgebra& ma,
                                    const UniversalGroup& u, std::size_t x);

/// Splits a Matsuo algebra along the connected components of its space
/// (isolated points give 1-dimensional factors); cross-component structure
/// constants must vanish.
std::vector<MatsuoAlgebra> component_decompose(const MatsuoAlgebra& ma);

/// Module on the quotient space M / N for a submodule N.
AlgebraModule quotient_module(const AlgebraModule& m, const Subspace& n);

AlgebraModule direct_sum(const AlgebraModule& a, const AlgebraModule& b);

}  // namespace axial
