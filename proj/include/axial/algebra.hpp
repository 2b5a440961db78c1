#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "axial/fusion.hpp"
#include "axial/geometry.hpp"
#include "axial/matrix.hpp"
#include "axial/subspace.hpp"

namespace axial {

// Commutative algebra by structure constants: products[i][j] is the
// coordinate vector of (basis i)·(basis j).
struct Algebra {
  std::vector<std::string> basis;
  std::vector<std::vector<Vec>> products;

  std::size_t dim() const { return basis.size(); }
  Vec mul(const Vec& a, const Vec& b) const;
  /// Multiplication-by-e operator as a matrix (columns are basis_j · e).
  Matrix ad(const Vec& e) const;
  void check_commutative() const;  // throws Errc::bad_parameter
};

// Axes are stored as explicit coordinate vectors so non-basis axes are
// first-class.
struct AxialAlgebra {
  Algebra algebra;
  std::vector<Vec> axes;
  FusionRule rule;
};

/// Eigenspace of the multiplication operator of e: ker(ad_e - phi·I).
Subspace eigenspace(const Algebra& a, const Vec& e, const Rational& phi);

struct AxisWitness {
  std::string reason;
  Rational phi;
  Rational psi;
  Vec u;
  Vec v;
  Vec product;
};

struct AxisReport {
  bool ok = false;
  std::optional<AxisWitness> witness;
};

/// e·e = e, the Phi-eigenspaces sum directly to the algebra, and products of
/// eigenbasis vectors respect the star table.
AxisReport check_axis(const Algebra& a, const Vec& e, const FusionRule& rule);

struct AxialReport {
  bool ok = false;
  std::optional<std::size_t> failing_axis;
  std::optional<AxisWitness> witness;
  bool generates = false;
};

/// check_axis for every axis plus generation: the multiplication-closed span
/// of the axes is the whole algebra.
AxialReport check_axial(const AxialAlgebra& aa);

/// +1 on the plus-graded eigenspaces of the axis, -1 on the minus part.
/// Verifies the result is a self-inverse algebra automorphism.
/// Throws Errc::no_grading.
Matrix miyamoto_matrix(const AxialAlgebra& aa, std::size_t axis_index);

struct ClosureReport {
  bool ok = false;
  std::vector<Vec> closure;  // axes plus any images needed to close
};

/// Checks each axis image under each Miyamoto involution is again an axis
/// vector of the set; otherwise reports the closure under repeated images.
ClosureReport miyamoto_closed(const AxialAlgebra& aa);

// A Matsuo algebra remembers its Fischer space and alpha.
struct MatsuoAlgebra {
  AxialAlgebra axial;
  FischerSpace space;
  Rational alpha;
};

/// Basis = points; x·x = x, x·y = 0 off lines, (alpha/2)(x + y - x∧y) on
/// lines; rule = jordan_rule(alpha); axes = all points.
MatsuoAlgebra matsuo(const FischerSpace& fs, const Rational& alpha);

/// Same product formula over any partial triple system, without the
/// Fischer-space validation: the points are axes exactly when the space is
/// a Fischer space. Throws Errc::not_partial_triple_system / Errc::bad_alpha.
AxialAlgebra matsuo_of_triple_system(const PointLineGeometry& g, const Rational& alpha);

struct MatsuoEigenbasis {
  Subspace one;
  Subspace zero;
  Subspace alpha;
};

/// The three spanning sets of the point eigenspaces; asserts they equal the
/// kernel-computed eigenspaces and sum directly to the whole algebra.
MatsuoEigenbasis matsuo_eigenbasis(const FischerSpace& fs, const Rational& alpha, std::size_t x);

/// I + (alpha/2) · collinearity matrix.
Matrix frobenius_gram(const FischerSpace& fs, const Rational& alpha);

struct FrobeniusReport {
  bool associative = false;
  bool eigen_orthogonal = false;
  bool nondegenerate = false;
  Rational gram_det;
};

/// ⟨xa,b⟩ = ⟨a,xb⟩ on basis triples; distinct-eigenvalue eigenspaces of each
/// axis perpendicular; nondegenerate iff det(gram) != 0.
FrobeniusReport frobenius_check(const AxialAlgebra& aa, const Matrix& gram);

/// (1+alpha·d)^{-1}·Σx when 1+alpha·d != 0 (d = lines through a point,
/// constant on a connected space); otherwise nullopt, after certifying that
/// ⟨Σx⟩ is closed under multiplication. Throws Errc::not_connected.
std::optional<Vec> unit_element(const FischerSpace& fs, const Rational& alpha);

/// Three-dimensional algebra on {1, u, v} with u² = v² = 1, uv = 0; axes
/// (1±u)/2 and (1±v)/2 under the alpha = 1/2 rule.
AxialAlgebra clifford_example();

}  // namespace axial
