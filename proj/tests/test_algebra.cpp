#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <array>
#include <set>

#include "axial/algebra.hpp"
#include "axial/error.hpp"
#include "axial/geometry.hpp"

using namespace axial;

namespace {

const Rational kHalf(1, 2);

PointLineGeometry pencil() {
  return PointLineGeometry::from_labels({"a", "b", "c", "d", "e"},
                                        {{"a", "b", "c"}, {"a", "d", "e"}});
}

Vec basis_vec(std::size_t dim, std::size_t i) {
  Vec v(dim);
  v[i] = 1;
  return v;
}

}  // namespace

TEST_CASE("jordan rule matches the three-eigenvalue table") {
  FusionRule rule = jordan_rule(kHalf);
  auto star = [&](const Rational& a, const Rational& b) {
    std::set<Rational> out;
    for (std::size_t k : rule.star(*rule.index_of(a), *rule.index_of(b))) {
      out.insert(rule.eigenvalue(k));
    }
    return out;
  };
  CHECK(star(1, 1) == std::set<Rational>{1});
  CHECK(star(1, 0).empty());
  CHECK(star(1, kHalf) == std::set<Rational>{kHalf});
  CHECK(star(0, 0) == std::set<Rational>{0});
  CHECK(star(0, kHalf) == std::set<Rational>{kHalf});
  CHECK(star(kHalf, kHalf) == std::set<Rational>{1, 0});

  CHECK(rule.graded());
  CHECK_THROWS_AS(jordan_rule(Rational(0)), Error);
  CHECK_THROWS_AS(jordan_rule(Rational(1)), Error);
}

TEST_CASE("griess rule matches the four-eigenvalue table") {
  FusionRule rule = griess_rule();
  const Rational q(1, 4);
  const Rational t(1, 32);
  auto star = [&](const Rational& a, const Rational& b) {
    std::set<Rational> out;
    for (std::size_t k : rule.star(*rule.index_of(a), *rule.index_of(b))) {
      out.insert(rule.eigenvalue(k));
    }
    return out;
  };
  CHECK(star(t, t) == std::set<Rational>{1, 0, q});
  CHECK(star(q, q) == std::set<Rational>{1, 0});
  CHECK(star(q, t) == std::set<Rational>{t});
  CHECK(star(1, 0).empty());
  CHECK(star(0, q) == std::set<Rational>{q});
  CHECK(check_grading(rule, {Rational(1), Rational(0), q}, {t}));
}

TEST_CASE("grading checks") {
  FusionRule rule = jordan_rule(kHalf);
  CHECK(check_grading(rule, {Rational(1), Rational(0)}, {kHalf}));
  CHECK_FALSE(check_grading(rule, {Rational(1), kHalf}, {Rational(0)}));
  CHECK_THROWS_AS(check_grading(rule, {Rational(1)}, {kHalf}), Error);
  CHECK_THROWS_AS(check_grading(rule, {Rational(1), Rational(0), kHalf}, {kHalf}), Error);
}

TEST_CASE("matsuo products") {
  FischerSpace line = catalog("single_line");
  MatsuoAlgebra ma = matsuo(line, kHalf);
  const Algebra& alg = ma.axial.algebra;

  // a*b = (alpha/2)(a + b - c)
  Vec ab = alg.mul(basis_vec(3, 0), basis_vec(3, 1));
  CHECK(ab == Vec{Rational(1, 4), Rational(1, 4), Rational(-1, 4)});
  for (std::size_t x = 0; x < 3; ++x) {
    CHECK(alg.mul(basis_vec(3, x), basis_vec(3, x)) == basis_vec(3, x));
  }

  // Non-collinear points multiply to zero.
  FischerSpace dual2 = catalog("dual_affine_2");
  MatsuoAlgebra md = matsuo(dual2, kHalf);
  std::size_t zeros = 0;
  for (std::size_t x = 0; x < 6; ++x) {
    for (std::size_t y = x + 1; y < 6; ++y) {
      if (!dual2.collinear(x, y)) {
        CHECK(vec_is_zero(md.axial.algebra.mul(basis_vec(6, x), basis_vec(6, y))));
        ++zeros;
      }
    }
  }
  CHECK(zeros == 3);

  CHECK_THROWS_AS(matsuo(line, Rational(0)), Error);
  CHECK_THROWS_AS(matsuo(line, Rational(1)), Error);
}

TEST_CASE("matsuo eigenspaces have the expected dimensions") {
  auto dims = [](const char* name, const Rational& alpha) {
    FischerSpace fs = catalog(name);
    MatsuoEigenbasis basis = matsuo_eigenbasis(fs, alpha, 0);
    return std::array<std::size_t, 3>{basis.one.dim(), basis.zero.dim(), basis.alpha.dim()};
  };
  CHECK(dims("affine_3", kHalf) == std::array<std::size_t, 3>{1, 4, 4});
  CHECK(dims("dual_affine_2", kHalf) == std::array<std::size_t, 3>{1, 3, 2});
  CHECK(dims("single_line", kHalf) == std::array<std::size_t, 3>{1, 1, 1});
}

TEST_CASE("eigenspace examples on the single line") {
  FischerSpace line = catalog("single_line");
  MatsuoAlgebra ma = matsuo(line, kHalf);
  Vec a = basis_vec(3, 0);
  Subspace one = eigenspace(ma.axial.algebra, a, Rational(1));
  CHECK(one.dim() == 1);
  CHECK(one.contains(a));
  Subspace alpha_sp = eigenspace(ma.axial.algebra, a, kHalf);
  CHECK(alpha_sp.dim() == 1);
  CHECK(alpha_sp.contains(Vec{0, 1, -1}));
  CHECK(eigenspace(ma.axial.algebra, a, Rational(7)).dim() == 0);
}

TEST_CASE("fusion holds on catalog spaces for several alphas") {
  const std::vector<Rational> alphas = {kHalf, Rational(-1), Rational(2), Rational(1, 3)};
  for (const char* name : {"single_line", "dual_affine_2", "affine_3"}) {
    FischerSpace fs = catalog(name);
    for (const auto& alpha : alphas) {
      MatsuoAlgebra ma = matsuo(fs, alpha);
      CAPTURE(name);
      CAPTURE(rational_to_string(alpha));
      CHECK(check_axial(ma.axial).ok);
    }
  }
}

TEST_CASE("fusion fails on the pencil at the common point") {
  // The pencil is a partial triple system but not a Fischer space, so the
  // point on both lines is not an axis: two of its 0-eigenvectors multiply
  // into the 1-eigenspace.
  AxialAlgebra aa = matsuo_of_triple_system(pencil(), kHalf);
  AxisReport at_common = check_axis(aa.algebra, basis_vec(5, 0), jordan_rule(kHalf));
  CHECK_FALSE(at_common.ok);
  REQUIRE(at_common.witness.has_value());
  CHECK(at_common.witness->reason == "fusion violated");
  CHECK(at_common.witness->phi == 0);
  CHECK(at_common.witness->psi == 0);
  CHECK_FALSE(vec_is_zero(at_common.witness->product));

  AxialReport whole = check_axial(aa);
  CHECK_FALSE(whole.ok);
  REQUIRE(whole.failing_axis.has_value());

  // On a genuine Fischer space both constructions agree.
  FischerSpace line = catalog("single_line");
  CHECK(matsuo_of_triple_system(line.geometry(), kHalf).algebra.products ==
        matsuo(line, kHalf).axial.algebra.products);
}

TEST_CASE("check_axial needs generation") {
  FischerSpace fs = catalog("affine_3");
  MatsuoAlgebra ma = matsuo(fs, kHalf);
  AxialAlgebra truncated = ma.axial;
  truncated.axes = {basis_vec(9, 0)};
  AxialReport report = check_axial(truncated);
  CHECK_FALSE(report.ok);
  CHECK_FALSE(report.generates);
}

TEST_CASE("miyamoto matrix on the single line swaps the other points") {
  MatsuoAlgebra ma = matsuo(catalog("single_line"), kHalf);
  Matrix tau = miyamoto_matrix(ma.axial, 0);
  CHECK(tau.apply(basis_vec(3, 0)) == basis_vec(3, 0));
  CHECK(tau.apply(basis_vec(3, 1)) == basis_vec(3, 2));
  CHECK(tau.apply(basis_vec(3, 2)) == basis_vec(3, 1));
}

TEST_CASE("miyamoto matrices are automorphisms of order at most two") {
  for (const char* name : {"single_line", "dual_affine_2"}) {
    MatsuoAlgebra ma = matsuo(catalog(name), Rational(1, 3));
    const std::size_t n = ma.axial.algebra.dim();
    for (std::size_t e = 0; e < n; ++e) {
      Matrix tau = miyamoto_matrix(ma.axial, e);
      CHECK((tau * tau).is_identity());
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          Vec lhs = tau.apply(ma.axial.algebra.mul(basis_vec(n, i), basis_vec(n, j)));
          Vec rhs = ma.axial.algebra.mul(tau.apply(basis_vec(n, i)), tau.apply(basis_vec(n, j)));
          CHECK(lhs == rhs);
        }
      }
    }
  }
}

TEST_CASE("conjugation identity for miyamoto involutions") {
  MatsuoAlgebra ma = matsuo(catalog("dual_affine_2"), kHalf);
  const std::size_t n = ma.axial.algebra.dim();
  std::vector<Matrix> taus;
  for (std::size_t e = 0; e < n; ++e) taus.push_back(miyamoto_matrix(ma.axial, e));
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      Vec image = taus[y].apply(ma.axial.axes[x]);
      std::size_t image_index = n;
      for (std::size_t k = 0; k < n; ++k) {
        if (ma.axial.axes[k] == image) image_index = k;
      }
      REQUIRE(image_index < n);
      CHECK(taus[y] * taus[x] * taus[y] == taus[image_index]);
    }
  }
}

TEST_CASE("axis with trivial minus part gives the identity involution") {
  // One isolated point adjoined to a line: its tau matrix is the identity.
  FischerSpace fs(PointLineGeometry::from_labels({"a", "b", "c", "x"}, {{"a", "b", "c"}}));
  MatsuoAlgebra ma = matsuo(fs, kHalf);
  Matrix tau = miyamoto_matrix(ma.axial, 3);
  CHECK(tau.is_identity());
}

TEST_CASE("miyamoto closure restores a dropped point") {
  MatsuoAlgebra ma = matsuo(catalog("affine_3"), kHalf);
  CHECK(miyamoto_closed(ma.axial).ok);

  AxialAlgebra truncated = ma.axial;
  truncated.axes.pop_back();
  ClosureReport report = miyamoto_closed(truncated);
  CHECK_FALSE(report.ok);
  CHECK(report.closure.size() == 9);
  std::set<Vec> closure(report.closure.begin(), report.closure.end());
  std::set<Vec> full(ma.axial.axes.begin(), ma.axial.axes.end());
  CHECK(closure == full);
}

TEST_CASE("clifford example") {
  AxialAlgebra aa = clifford_example();
  REQUIRE(aa.axes.size() == 4);
  for (const auto& axis : aa.axes) {
    CHECK(aa.algebra.mul(axis, axis) == axis);
  }
  CHECK(check_axial(aa).ok);
  CHECK(miyamoto_closed(aa).ok);

  Matrix t0 = miyamoto_matrix(aa, 0);
  Matrix t1 = miyamoto_matrix(aa, 1);
  Matrix t2 = miyamoto_matrix(aa, 2);
  Matrix t3 = miyamoto_matrix(aa, 3);
  CHECK(t0 == t1);  // the complementary idempotent gives the same involution
  CHECK(t2 == t3);
  CHECK(t0 != t2);
  // t0 fixes one and u, negates v.
  CHECK(t0.apply(Vec{1, 0, 0}) == Vec{1, 0, 0});
  CHECK(t0.apply(Vec{0, 1, 0}) == Vec{0, 1, 0});
  CHECK(t0.apply(Vec{0, 0, 1}) == Vec{0, 0, -1});
}

TEST_CASE("frobenius gram matches the pairing formula") {
  FischerSpace line = catalog("single_line");
  Matrix gram = frobenius_gram(line, kHalf);
  Matrix expected{{1, Rational(1, 4), Rational(1, 4)},
                  {Rational(1, 4), 1, Rational(1, 4)},
                  {Rational(1, 4), Rational(1, 4), 1}};
  CHECK(gram == expected);

  FischerSpace aff3 = catalog("affine_3");
  Matrix g3 = frobenius_gram(aff3, kHalf);
  for (std::size_t i = 0; i < 9; ++i) {
    for (std::size_t j = 0; j < 9; ++j) {
      CHECK(g3.at(i, j) == (i == j ? Rational(1) : Rational(1, 4)));
    }
  }

  Matrix rebuilt = collinearity_matrix(line).scaled(kHalf / 2) + Matrix::identity(3);
  CHECK(gram == rebuilt);
}

TEST_CASE("frobenius checks on the single line") {
  FischerSpace line = catalog("single_line");
  {
    MatsuoAlgebra ma = matsuo(line, kHalf);
    FrobeniusReport report = frobenius_check(ma.axial, frobenius_gram(line, kHalf));
    CHECK(report.associative);
    CHECK(report.eigen_orthogonal);
    CHECK(report.nondegenerate);
    CHECK(report.gram_det == Rational(27, 32));
  }
  {
    MatsuoAlgebra ma = matsuo(line, Rational(-1));
    FrobeniusReport report = frobenius_check(ma.axial, frobenius_gram(line, Rational(-1)));
    CHECK(report.associative);
    CHECK_FALSE(report.nondegenerate);
    CHECK(report.gram_det == 0);
  }
  {
    // The identity form does not associate with the product.
    MatsuoAlgebra ma = matsuo(line, kHalf);
    FrobeniusReport report = frobenius_check(ma.axial, Matrix::identity(3));
    CHECK_FALSE(report.associative);
  }
}

TEST_CASE("gram determinant vanishes exactly at the degenerate alphas") {
  // det(I + (alpha/2)A) for the single line is (1+alpha)(1-alpha/2)^2.
  FischerSpace line = catalog("single_line");
  for (int num = -3; num <= 3; ++num) {
    Rational alpha(num, 1);
    if (alpha == 0 || alpha == 1) continue;
    Rational expected = (1 + alpha) * (1 - alpha / 2) * (1 - alpha / 2);
    CHECK(det(frobenius_gram(line, alpha)) == expected);
  }
  // Octahedron spectrum {4, 0, 0, 0, -2, -2} gives (1+2a)(1-a)^2.
  FischerSpace dual2 = catalog("dual_affine_2");
  CHECK(det(frobenius_gram(dual2, Rational(-1, 2))) == 0);
  CHECK(det(frobenius_gram(dual2, kHalf)) != 0);
}

TEST_CASE("unit element") {
  FischerSpace line = catalog("single_line");
  auto unit = unit_element(line, kHalf);
  REQUIRE(unit.has_value());
  CHECK(*unit == Vec{Rational(2, 3), Rational(2, 3), Rational(2, 3)});

  CHECK_FALSE(unit_element(line, Rational(-1)).has_value());

  auto unit3 = unit_element(catalog("affine_3"), kHalf);
  REQUIRE(unit3.has_value());
  CHECK(*unit3 == Vec(9, Rational(1, 3)));

  PointLineGeometry two_lines = PointLineGeometry::from_labels(
      {"a", "b", "c", "x", "y", "z"}, {{"a", "b", "c"}, {"x", "y", "z"}});
  CHECK_THROWS_AS(unit_element(FischerSpace(two_lines), kHalf), Error);
}

TEST_CASE("sum vector scales every element by 1 + alpha d") {
  for (const char* name : {"single_line", "dual_affine_2", "affine_3"}) {
    FischerSpace fs = catalog(name);
    const std::size_t n = fs.n_points();
    const std::size_t d = fs.lines_through(0);
    for (const Rational& alpha : {kHalf, Rational(2)}) {
      MatsuoAlgebra ma = matsuo(fs, alpha);
      Vec all(n, Rational(1));
      for (std::size_t i = 0; i < n; ++i) {
        Vec expected = vec_scaled(basis_vec(n, i), 1 + alpha * Rational(d));
        CHECK(ma.axial.algebra.mul(all, basis_vec(n, i)) == expected);
      }
    }
  }
}
