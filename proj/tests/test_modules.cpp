#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "axial/error.hpp"
#include "axial/module.hpp"

using namespace axial;

namespace {

const Rational kHalf(1, 2);

Vec basis_vec(std::size_t dim, std::size_t i) {
  Vec v(dim);
  v[i] = 1;
  return v;
}

AlgebraModule sign_module(const MatsuoAlgebra& ma) {
  AlgebraModule m;
  m.dim = 1;
  for (std::size_t i = 0; i < ma.axial.algebra.dim(); ++i) {
    Matrix a(1, 1);
    a.at(0, 0) = ma.alpha;
    m.actions.push_back(a);
  }
  return m;
}

AlgebraModule zero_module(const MatsuoAlgebra& ma) {
  AlgebraModule m;
  m.dim = 1;
  m.actions.assign(ma.axial.algebra.dim(), Matrix(1, 1));
  return m;
}

GroupRepresentation regular_representation(const UniversalGroup& u) {
  GroupRepresentation rho;
  rho.dim = u.order();
  rho.labels = u.generator_labels();
  for (std::size_t g = 0; g < u.n_generators(); ++g) {
    Permutation p = u.generator_permutation(g);
    Matrix image(u.order(), u.order());
    for (std::size_t j = 0; j < u.order(); ++j) image.at(p.apply(j), j) = 1;
    rho.images.push_back(std::move(image));
  }
  return rho;
}

}  // namespace

TEST_CASE("regular modules pass the module axioms") {
  for (const char* name : {"single_line", "affine_3"}) {
    MatsuoAlgebra ma = matsuo(catalog(name), kHalf);
    AlgebraModule reg = regular_module(ma.axial);
    CAPTURE(name);
    CHECK(reg.dim == ma.axial.algebra.dim());
    CHECK(check_module(reg, ma.axial).ok);
  }
  AxialAlgebra clifford = clifford_example();
  AlgebraModule reg = regular_module(clifford);
  CHECK(reg.dim == 3);
  CHECK(check_module(reg, clifford).ok);
}

TEST_CASE("zero-action and sign modules are modules") {
  MatsuoAlgebra ma = matsuo(catalog("single_line"), kHalf);
  CHECK(check_module(zero_module(ma), ma.axial).ok);
  CHECK(check_module(sign_module(ma), ma.axial).ok);
}

TEST_CASE("a corrupted action is reported") {
  MatsuoAlgebra ma = matsuo(catalog("single_line"), kHalf);
  AlgebraModule reg = regular_module(ma.axial);
  reg.actions[0].at(1, 2) += 1;
  ModuleReport report = check_module(reg, ma.axial);
  CHECK_FALSE(report.ok);
  CHECK_FALSE(report.witness.empty());
}

TEST_CASE("module eigenspaces") {
  MatsuoAlgebra ma = matsuo(catalog("affine_3"), kHalf);
  AlgebraModule reg = regular_module(ma.axial);
  Vec x = basis_vec(9, 0);
  Subspace one = module_eigenspace(reg, x, Rational(1));
  CHECK(one.dim() == 1);
  CHECK(one.contains(x));
  CHECK(module_eigenspace(reg, x, kHalf).dim() == 4);

  AlgebraModule zero = zero_module(ma);
  CHECK(module_eigenspace(zero, x, Rational(0)).dim() == 1);
}

TEST_CASE("module involutions") {
  MatsuoAlgebra ma = matsuo(catalog("dual_affine_2"), kHalf);
  AlgebraModule reg = regular_module(ma.axial);
  for (std::size_t x = 0; x < 6; ++x) {
    CHECK(mu_involution(reg, ma.axial, x) == miyamoto_matrix(ma.axial, x));
  }
  AlgebraModule zero = zero_module(ma);
  CHECK(mu_involution(zero, ma.axial, 0).is_identity());

  MatsuoAlgebra line = matsuo(catalog("single_line"), kHalf);
  AlgebraModule sign = sign_module(line);
  Matrix mu = mu_involution(sign, line.axial, 0);
  CHECK(mu.at(0, 0) == -1);
}

TEST_CASE("module involution rejects a non-module") {
  MatsuoAlgebra ma = matsuo(catalog("single_line"), kHalf);
  AlgebraModule broken = regular_module(ma.axial);
  broken.actions[0].at(0, 0) += 7;  // introduces an eigenvalue outside {1,0,alpha}
  CHECK_THROWS_AS(mu_involution(broken, ma.axial, 0), Error);
}

TEST_CASE("module to representation satisfies the presentation") {
  MatsuoAlgebra ma = matsuo(catalog("affine_3"), kHalf);
  UniversalGroup u = todd_coxeter(build_presentation(ma.axial));
  AlgebraModule reg = regular_module(ma.axial);
  GroupRepresentation rho = module_to_rep(reg, ma.axial, u);
  CHECK(rho.dim == 9);
  CHECK(rho.images.size() == 9);
  for (const auto& image : rho.images) {
    CHECK((image * image).is_identity());
  }
}

TEST_CASE("representation to module on the single line") {
  MatsuoAlgebra ma = matsuo(catalog("single_line"), kHalf);
  UniversalGroup u = todd_coxeter(build_presentation(ma.axial));

  // Regular representation of U: dimension |U|, all axioms hold.
  GroupRepresentation rho = regular_representation(u);
  AlgebraModule mod = rep_to_module(rho, kHalf, ma);
  CHECK(mod.dim == u.order());
  CHECK(check_module(mod, ma.axial).ok);

  // Trivial representation: every point acts as zero.
  GroupRepresentation trivial;
  trivial.dim = 1;
  trivial.labels = u.generator_labels();
  trivial.images.assign(3, Matrix::identity(1));
  AlgebraModule zero = rep_to_module(trivial, kHalf, ma);
  for (const auto& action : zero.actions) CHECK(action.is_zero());

  // Sign character: every point acts as alpha.
  GroupRepresentation sign;
  sign.dim = 1;
  sign.labels = u.generator_labels();
  Matrix minus_one(1, 1);
  minus_one.at(0, 0) = -1;
  sign.images.assign(3, minus_one);
  AlgebraModule alpha_mod = rep_to_module(sign, kHalf, ma);
  for (const auto& action : alpha_mod.actions) {
    CHECK(action.at(0, 0) == kHalf);
  }

  // Non-involutions are rejected.
  GroupRepresentation bad;
  bad.dim = 1;
  bad.labels = u.generator_labels();
  Matrix two(1, 1);
  two.at(0, 0) = 2;
  bad.images.assign(3, two);
  CHECK_THROWS_AS(rep_to_module(bad, kHalf, ma), Error);
}

TEST_CASE("rep_to_module of the regular representation across alphas") {
  for (const char* name : {"single_line", "dual_affine_2", "affine_3"}) {
    for (const Rational& alpha : {kHalf, Rational(2), Rational(-1), Rational(1, 3)}) {
      MatsuoAlgebra ma = matsuo(catalog(name), alpha);
      UniversalGroup u = todd_coxeter(build_presentation(ma.axial));
      AlgebraModule mod = rep_to_module(regular_representation(u), alpha, ma);
      CAPTURE(name);
      CAPTURE(rational_to_string(alpha));
      CHECK(check_module(mod, ma.axial).ok);
    }
  }
}

TEST_CASE("clifford regular module gives a representation of its group") {
  AxialAlgebra clifford = clifford_example();
  UniversalGroup u = todd_coxeter(build_presentation(clifford));
  AlgebraModule reg = regular_module(clifford);
  GroupRepresentation rho = module_to_rep(reg, clifford, u);
  CHECK(rho.dim == 3);
  CHECK(rho.images[0] == rho.images[1]);  // paired axes share an involution
  CHECK(rho.images[2] == rho.images[3]);
  CHECK(rho.images[0] != rho.images[2]);
}

TEST_CASE("the zero family is a non-injective homomorphism") {
  MatsuoAlgebra ma = matsuo(catalog("single_line"), kHalf);
  AlgebraModule reg = regular_module(ma.axial);
  AveragedFamily zero;
  zero.x = 0;
  zero.u_x_order = 0;
  zero.m_points.assign(3, Vec(3));
  RegularMapReport report = regular_map(reg, ma, zero);
  CHECK(report.is_hom);
  CHECK_FALSE(report.injective);
  CHECK(report.rank == 0);
}

TEST_CASE("roundtrip is a fixed point on modules with trivial 1-eigenspaces") {
  MatsuoAlgebra ma = matsuo(catalog("single_line"), kHalf);
  UniversalGroup u = todd_coxeter(build_presentation(ma.axial));

  CHECK(roundtrip_check(zero_module(ma), ma, u));
  CHECK(roundtrip_check(sign_module(ma), ma, u));
  AlgebraModule from_regular_rep = rep_to_module(regular_representation(u), kHalf, ma);
  CHECK(roundtrip_check(from_regular_rep, ma, u));

  // The regular algebra module has 1-eigenvectors, so it is out of scope.
  CHECK_THROWS_AS(roundtrip_check(regular_module(ma.axial), ma, u), Error);
}

TEST_CASE("frobenius module checks") {
  MatsuoAlgebra ma = matsuo(catalog("single_line"), kHalf);
  AlgebraModule reg = regular_module(ma.axial);
  ModuleForm gram{frobenius_gram(ma.space, kHalf)};
  CHECK(frobenius_module_check(reg, gram, ma.axial));
  CHECK_FALSE(frobenius_module_check(reg, ModuleForm{Matrix::identity(3)}, ma.axial));

  ModuleForm any{Matrix{{Rational(5)}}};
  CHECK(frobenius_module_check(zero_module(ma), any, ma.axial));
}

TEST_CASE("distinct module eigenspaces are perpendicular under a module form") {
  for (const char* name : {"single_line", "dual_affine_2"}) {
    MatsuoAlgebra ma = matsuo(catalog(name), kHalf);
    AlgebraModule reg = regular_module(ma.axial);
    Matrix gram = frobenius_gram(ma.space, kHalf);
    const std::size_t n = reg.dim;
    for (std::size_t x = 0; x < n; ++x) {
      Vec axis = basis_vec(n, x);
      std::vector<Subspace> eig;
      for (const Rational& phi : {Rational(1), Rational(0), kHalf}) {
        eig.push_back(module_eigenspace(reg, axis, phi));
      }
      for (std::size_t i = 0; i < eig.size(); ++i) {
        for (std::size_t j = i + 1; j < eig.size(); ++j) {
          for (const auto& uvec : eig[i].basis_vectors()) {
            Vec gu = gram.apply(uvec);
            for (const auto& vvec : eig[j].basis_vectors()) {
              Rational pairing = 0;
              for (std::size_t k = 0; k < n; ++k) pairing += vvec[k] * gu[k];
              CHECK(pairing == 0);
            }
          }
        }
      }
    }
  }
}

TEST_CASE("maschke complement splits a block sum") {
  MatsuoAlgebra ma = matsuo(catalog("single_line"), kHalf);
  AlgebraModule reg = regular_module(ma.axial);
  AlgebraModule sum = direct_sum(reg, sign_module(ma));

  Matrix gram(4, 4);
  Matrix reg_gram = frobenius_gram(ma.space, kHalf);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) gram.at(i, j) = reg_gram.at(i, j);
  }
  gram.at(3, 3) = 1;
  ModuleForm form{gram};
  CHECK(frobenius_module_check(sum, form, ma.axial));

  Subspace reg_block = Subspace::span(
      4, {basis_vec(4, 0), basis_vec(4, 1), basis_vec(4, 2)});
  Subspace complement = maschke_complement(sum, form, reg_block, ma.axial);
  CHECK(complement.dim() == 1);
  CHECK(complement.contains(basis_vec(4, 3)));

  // The whole module complements to zero.
  Subspace whole = Subspace::full(4);
  CHECK(maschke_complement(sum, form, whole, ma.axial).dim() == 0);

  // Not a submodule: a random line inside the regular block.
  Subspace not_sub = Subspace::span(4, {basis_vec(4, 0)});
  CHECK_THROWS_AS(maschke_complement(sum, form, not_sub, ma.axial), Error);
}

TEST_CASE("maschke rejects the degenerate sum-vector line") {
  MatsuoAlgebra ma = matsuo(catalog("single_line"), Rational(-1));
  AlgebraModule reg = regular_module(ma.axial);
  ModuleForm form{frobenius_gram(ma.space, Rational(-1))};
  CHECK(frobenius_module_check(reg, form, ma.axial));
  Subspace n = Subspace::span(3, {Vec{1, 1, 1}});
  try {
    maschke_complement(reg, form, n, ma.axial);
    FAIL("expected DegenerateOnN");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::degenerate_on_n);
  }
}

TEST_CASE("averaged family on the affine plane regular module") {
  MatsuoAlgebra ma = matsuo(catalog("affine_3"), kHalf);
  UniversalGroup u = todd_coxeter(build_presentation(ma.axial));
  AlgebraModule reg = regular_module(ma.axial);
  Vec seed = basis_vec(9, 0);
  AveragedFamily family = averaged_family(reg, ma, u, 0, seed);
  CHECK(family.u_x_order == 2);
  for (std::size_t y = 0; y < 9; ++y) {
    CHECK(family.m_points[y] == vec_scaled(basis_vec(9, y), Rational(family.u_x_order)));
  }

  RegularMapReport report = regular_map(reg, ma, family);
  CHECK(report.is_hom);
  CHECK(report.rank == 9);
  CHECK(report.injective);

  CHECK_THROWS_AS(averaged_family(reg, ma, u, 0, Vec(9)), Error);
  CHECK_THROWS_AS(averaged_family(reg, ma, u, 0, basis_vec(9, 1)), Error);
}

TEST_CASE("representative choice does not change the family") {
  MatsuoAlgebra ma = matsuo(catalog("single_line"), kHalf);
  UniversalGroup u = todd_coxeter(build_presentation(ma.axial));
  AlgebraModule reg = regular_module(ma.axial);
  AveragedFamily family = averaged_family(reg, ma, u, 0, basis_vec(3, 0));

  // Any t with t_x^t = t_y gives the same m_y.
  std::vector<Matrix> mu;
  for (std::size_t p = 0; p < 3; ++p) mu.push_back(mu_involution(reg, ma.axial, p));
  std::size_t tx = u.generator_element(0);
  for (std::size_t y = 1; y < 3; ++y) {
    std::size_t ty = u.generator_element(y);
    for (std::size_t t = 0; t < u.order(); ++t) {
      if (u.conj(tx, t) != ty) continue;
      Matrix m = Matrix::identity(3);
      for (std::size_t g : u.word_of(t)) m = mu[g] * m;
      CHECK(m.apply(family.m_points[0]) == family.m_points[y]);
    }
  }
}

TEST_CASE("quotient by the sum vector at alpha = -1 is a counterexample") {
  MatsuoAlgebra ma = matsuo(catalog("single_line"), Rational(-1));
  AlgebraModule reg = regular_module(ma.axial);

  Subspace sum_line = Subspace::span(3, {Vec{1, 1, 1}});
  AlgebraModule quot = quotient_module(reg, sum_line);
  CHECK(quot.dim == 2);
  CHECK(check_module(quot, ma.axial).ok);

  // Every axis keeps a nontrivial 1-eigenspace in the quotient.
  for (std::size_t x = 0; x < 3; ++x) {
    CHECK(module_eigenspace(quot, basis_vec(3, x), Rational(1)).dim() >= 1);
  }

  UniversalGroup u = todd_coxeter(build_presentation(ma.axial));
  Vec seed = module_eigenspace(quot, basis_vec(3, 0), Rational(1)).basis_vectors()[0];
  AveragedFamily family = averaged_family(quot, ma, u, 0, seed);
  RegularMapReport report = regular_map(quot, ma, family);
  CHECK(report.is_hom);
  CHECK_FALSE(report.injective);
  CHECK(report.rank < 3);
}

TEST_CASE("seed sweep on the regular module") {
  MatsuoAlgebra ma = matsuo(catalog("affine_3"), kHalf);
  UniversalGroup u = todd_coxeter(build_presentation(ma.axial));
  AlgebraModule reg = regular_module(ma.axial);
  std::vector<std::size_t> nonzero = seed_sweep(reg, ma, u, 0);
  CHECK(nonzero == std::vector<std::size_t>{0});
}

TEST_CASE("component decomposition") {
  {
    MatsuoAlgebra single = matsuo(catalog("affine_3"), kHalf);
    CHECK(component_decompose(single).size() == 1);
  }
  {
    FischerSpace two_lines(PointLineGeometry::from_labels(
        {"a", "b", "c", "x", "y", "z"}, {{"a", "b", "c"}, {"x", "y", "z"}}));
    MatsuoAlgebra ma = matsuo(two_lines, kHalf);
    auto blocks = component_decompose(ma);
    REQUIRE(blocks.size() == 2);
    CHECK(blocks[0].axial.algebra.dim() == 3);
    CHECK(blocks[1].axial.algebra.dim() == 3);
    CHECK(check_axial(blocks[0].axial).ok);
  }
  {
    FischerSpace line_and_point(
        PointLineGeometry::from_labels({"a", "b", "c", "x"}, {{"a", "b", "c"}}));
    MatsuoAlgebra ma = matsuo(line_and_point, kHalf);
    auto blocks = component_decompose(ma);
    REQUIRE(blocks.size() == 2);
    CHECK(blocks[0].axial.algebra.dim() == 3);
    CHECK(blocks[1].axial.algebra.dim() == 1);
    // The isolated factor is a copy of the base field.
    CHECK(blocks[1].axial.algebra.mul(Vec{1}, Vec{1}) == Vec{1});
  }
}

TEST_CASE("module action twists through the algebra involution") {
  MatsuoAlgebra ma = matsuo(catalog("dual_affine_2"), kHalf);
  AlgebraModule reg = regular_module(ma.axial);
  const std::size_t n = reg.dim;
  for (std::size_t x = 0; x < n; ++x) {
    Matrix mu = mu_involution(reg, ma.axial, x);
    Matrix tau = miyamoto_matrix(ma.axial, x);
    Permutation point = point_tau(ma.space, x);
    for (std::size_t a = 0; a < n; ++a) {
      // (m · a)^mu = m^mu · a^tau as operators on the module.
      Matrix lhs = mu * reg.actions[a];
      Matrix rhs = reg.action_of(tau.apply(basis_vec(n, a))) * mu;
      CHECK(lhs == rhs);
      CHECK(point.apply(a) < n);
    }
  }
}

TEST_CASE("module eigenspaces move along the involution") {
  MatsuoAlgebra ma = matsuo(catalog("dual_affine_2"), kHalf);
  AlgebraModule reg = regular_module(ma.axial);
  const std::size_t n = reg.dim;
  for (std::size_t x = 0; x < n; ++x) {
    Matrix mu = mu_involution(reg, ma.axial, x);
    Permutation point = point_tau(ma.space, x);
    for (std::size_t y = 0; y < n; ++y) {
      for (const Rational& phi : {Rational(1), Rational(0), kHalf}) {
        Subspace before = module_eigenspace(reg, basis_vec(n, y), phi);
        std::vector<Vec> mapped;
        for (const auto& v : before.basis_vectors()) mapped.push_back(mu.apply(v));
        Subspace after = Subspace::span(n, mapped);
        CHECK(after == module_eigenspace(reg, basis_vec(n, point.apply(y)), phi));
      }
    }
  }
}
