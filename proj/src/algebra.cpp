#include "axial/algebra.hpp"

#include <algorithm>
#include <set>

#include "axial/error.hpp"

namespace axial {

Vec Algebra::mul(const Vec& a, const Vec& b) const {
  if (a.size() != dim() || b.size() != dim()) {
    throw Error(Errc::dimension_mismatch, "algebra product operands");
  }
  Vec out(dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < dim(); ++j) {
      if (b[j] == 0) continue;
      const Rational coeff = a[i] * b[j];
      const Vec& cij = products[i][j];
      for (std::size_t k = 0; k < dim(); ++k) {
        if (cij[k] != 0) out[k] += coeff * cij[k];
      }
    }
  }
  return out;
}

Matrix Algebra::ad(const Vec& e) const {
  Matrix m(dim(), dim());
  for (std::size_t j = 0; j < dim(); ++j) {
    Vec basis_j(dim());
    basis_j[j] = 1;
    Vec image = mul(basis_j, e);
    for (std::size_t k = 0; k < dim(); ++k) m.at(k, j) = image[k];
  }
  return m;
}

void Algebra::check_commutative() const {
  if (products.size() != dim()) throw Error(Errc::bad_parameter, "structure constant shape");
  for (std::size_t i = 0; i < dim(); ++i) {
    if (products[i].size() != dim()) throw Error(Errc::bad_parameter, "structure constant shape");
    for (std::size_t j = 0; j < dim(); ++j) {
      if (products[i][j].size() != dim()) {
        throw Error(Errc::bad_parameter, "structure constant shape");
      }
      if (products[i][j] != products[j][i]) {
        throw Error(Errc::bad_parameter, "structure constants not commutative");
      }
    }
  }
}

Subspace eigenspace(const Algebra& a, const Vec& e, const Rational& phi) {
  Matrix shifted = a.ad(e);
  for (std::size_t i = 0; i < a.dim(); ++i) shifted.at(i, i) -= phi;
  return kernel(shifted);
}

namespace {

// Eigenbasis rows per eigenvalue index, or nothing when the eigenspaces do
// not sum directly to the whole algebra.
std::optional<std::vector<std::vector<Vec>>> eigenbasis_by_value(const Algebra& a, const Vec& e,
                                                                 const FusionRule& rule) {
  std::vector<std::vector<Vec>> basis(rule.size());
  std::size_t total = 0;
  for (std::size_t i = 0; i < rule.size(); ++i) {
    Subspace s = eigenspace(a, e, rule.eigenvalue(i));
    basis[i] = s.basis_vectors();
    total += s.dim();
  }
  if (total != a.dim()) return std::nullopt;
  return basis;
}

Subspace union_span(std::size_t ambient, const std::vector<std::vector<Vec>>& basis,
                    const std::vector<std::size_t>& which) {
  std::vector<Vec> gens;
  for (std::size_t i : which) {
    for (const auto& v : basis[i]) gens.push_back(v);
  }
  return Subspace::span(ambient, gens);
}

}  // namespace

AxisReport check_axis(const Algebra& a, const Vec& e, const FusionRule& rule) {
  AxisReport report;
  if (a.mul(e, e) != e) {
    report.witness = AxisWitness{"not idempotent", 0, 0, e, e, a.mul(e, e)};
    return report;
  }
  auto basis = eigenbasis_by_value(a, e, rule);
  if (!basis) {
    report.witness = AxisWitness{"eigenspaces do not span the algebra", 0, 0, {}, {}, {}};
    return report;
  }
  for (std::size_t i = 0; i < rule.size(); ++i) {
    for (std::size_t j = i; j < rule.size(); ++j) {
      Subspace target = union_span(a.dim(), *basis, rule.star(i, j));
      for (const auto& u : (*basis)[i]) {
        for (const auto& v : (*basis)[j]) {
          Vec product = a.mul(u, v);
          if (!target.contains(product)) {
            report.witness = AxisWitness{"fusion violated", rule.eigenvalue(i),
                                         rule.eigenvalue(j), u, v, product};
            return report;
          }
        }
      }
    }
  }
  report.ok = true;
  return report;
}

AxialReport check_axial(const AxialAlgebra& aa) {
  AxialReport report;
  for (std::size_t i = 0; i < aa.axes.size(); ++i) {
    AxisReport axis = check_axis(aa.algebra, aa.axes[i], aa.rule);
    if (!axis.ok) {
      report.failing_axis = i;
      report.witness = axis.witness;
      return report;
    }
  }
  // Generation: grow the span of the axes by pairwise products to a fixpoint.
  Subspace span = Subspace::span(aa.algebra.dim(), aa.axes);
  while (span.dim() < aa.algebra.dim()) {
    std::vector<Vec> gens = span.basis_vectors();
    std::vector<Vec> next = gens;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      for (std::size_t j = i; j < gens.size(); ++j) {
        next.push_back(aa.algebra.mul(gens[i], gens[j]));
      }
    }
    Subspace grown = Subspace::span(aa.algebra.dim(), next);
    if (grown.dim() == span.dim()) break;
    span = grown;
  }
  report.generates = (span.dim() == aa.algebra.dim());
  report.ok = report.generates;
  return report;
}

Matrix miyamoto_matrix(const AxialAlgebra& aa, std::size_t axis_index) {
  if (!aa.rule.graded()) throw Error(Errc::no_grading, "miyamoto_matrix needs a grading");
  if (axis_index >= aa.axes.size()) throw Error(Errc::bad_parameter, "axis index");
  const Vec& e = aa.axes[axis_index];
  auto basis = eigenbasis_by_value(aa.algebra, e, aa.rule);
  if (!basis) throw Error(Errc::bad_parameter, "axis is not diagonalizable");

  const std::size_t n = aa.algebra.dim();
  std::vector<Vec> columns;
  std::vector<int> signs;
  for (std::size_t i = 0; i < aa.rule.size(); ++i) {
    for (const auto& v : (*basis)[i]) {
      columns.push_back(v);
      signs.push_back(aa.rule.in_minus(i) ? -1 : 1);
    }
  }
  Matrix change(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) change.at(i, j) = columns[j][i];
  }
  Matrix signed_change(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      signed_change.at(i, j) = signs[j] == 1 ? columns[j][i] : -columns[j][i];
    }
  }
  Matrix tau = signed_change * inverse(change);

  if (!(tau * tau).is_identity()) throw Error(Errc::internal, "miyamoto map is not an involution");
  for (std::size_t i = 0; i < n; ++i) {
    Vec bi(n);
    bi[i] = 1;
    for (std::size_t j = 0; j < n; ++j) {
      Vec bj(n);
      bj[j] = 1;
      Vec lhs = tau.apply(aa.algebra.mul(bi, bj));
      Vec rhs = aa.algebra.mul(tau.apply(bi), tau.apply(bj));
      if (lhs != rhs) throw Error(Errc::internal, "miyamoto map is not an automorphism");
    }
  }
  return tau;
}

ClosureReport miyamoto_closed(const AxialAlgebra& aa) {
  if (!aa.rule.graded()) throw Error(Errc::no_grading, "miyamoto_closed needs a grading");
  ClosureReport report;
  report.closure = aa.axes;
  auto find = [&](const Vec& v) {
    for (std::size_t i = 0; i < report.closure.size(); ++i) {
      if (report.closure[i] == v) return true;
    }
    return false;
  };
  report.ok = true;
  // Images of axes are axes again, so new elements also contribute their
  // involutions to the sweep.
  for (std::size_t e = 0; e < report.closure.size(); ++e) {
    AxialAlgebra extended{aa.algebra, report.closure, aa.rule};
    Matrix tau = miyamoto_matrix(extended, e);
    for (std::size_t a = 0; a < report.closure.size(); ++a) {
      Vec image = tau.apply(report.closure[a]);
      if (!find(image)) {
        report.ok = false;
        report.closure.push_back(image);
        if (report.closure.size() > aa.axes.size() + 4096) {
          throw Error(Errc::cap_exceeded, "miyamoto closure did not stabilize");
        }
      }
    }
  }
  return report;
}

MatsuoAlgebra matsuo(const FischerSpace& fs, const Rational& alpha) {
  if (alpha == 0 || alpha == 1) throw Error(Errc::bad_alpha, "alpha must avoid 0 and 1");
  const std::size_t n = fs.n_points();
  Algebra alg;
  alg.basis = fs.geometry().points;
  alg.products.assign(n, std::vector<Vec>(n, Vec(n)));
  const Rational half_alpha = alpha / 2;
  for (std::size_t x = 0; x < n; ++x) {
    alg.products[x][x][x] = 1;
    for (std::size_t y = 0; y < n; ++y) {
      if (x == y || !fs.collinear(x, y)) continue;
      Vec& p = alg.products[x][y];
      p[x] += half_alpha;
      p[y] += half_alpha;
      p[fs.wedge(x, y)] -= half_alpha;
    }
  }
  std::vector<Vec> axes(n, Vec(n));
  for (std::size_t x = 0; x < n; ++x) axes[x][x] = 1;
  return MatsuoAlgebra{AxialAlgebra{std::move(alg), std::move(axes), jordan_rule(alpha)}, fs,
                       alpha};
}

AxialAlgebra matsuo_of_triple_system(const PointLineGeometry& g, const Rational& alpha) {
  if (alpha == 0 || alpha == 1) throw Error(Errc::bad_alpha, "alpha must avoid 0 and 1");
  auto pts = validate_partial_triple_system(g);
  if (!pts.ok) {
    throw Error(Errc::not_partial_triple_system,
                pts.witness ? pts.witness->reason : "invalid partial triple system");
  }
  const std::size_t n = g.n_points();
  Algebra alg;
  alg.basis = g.points;
  alg.products.assign(n, std::vector<Vec>(n, Vec(n)));
  const Rational half_alpha = alpha / 2;
  for (std::size_t x = 0; x < n; ++x) alg.products[x][x][x] = 1;
  for (const auto& line : g.lines) {
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 3; ++j) {
        if (i == j) continue;
        std::size_t x = line[i];
        std::size_t y = line[j];
        std::size_t w = line[3 - i - j];
        Vec& p = alg.products[x][y];
        p[x] = half_alpha;
        p[y] = half_alpha;
        p[w] = -half_alpha;
      }
    }
  }
  std::vector<Vec> axes(n, Vec(n));
  for (std::size_t x = 0; x < n; ++x) axes[x][x] = 1;
  return AxialAlgebra{std::move(alg), std::move(axes), jordan_rule(alpha)};
}

MatsuoEigenbasis matsuo_eigenbasis(const FischerSpace& fs, const Rational& alpha, std::size_t x) {
  if (x >= fs.n_points()) throw Error(Errc::unknown_point, "axis point out of range");
  MatsuoAlgebra ma = matsuo(fs, alpha);
  const std::size_t n = fs.n_points();

  std::vector<Vec> one_gens;
  {
    Vec v(n);
    v[x] = 1;
    one_gens.push_back(std::move(v));
  }
  std::vector<Vec> zero_gens;
  std::vector<Vec> alpha_gens;
  for (std::size_t y = 0; y < n; ++y) {
    if (y == x) continue;
    if (fs.collinear(x, y)) {
      Vec z(n);
      z[y] += 1;
      z[fs.wedge(x, y)] += 1;
      z[x] -= alpha;
      zero_gens.push_back(std::move(z));
      Vec a(n);
      a[y] += 1;
      a[fs.wedge(x, y)] -= 1;
      alpha_gens.push_back(std::move(a));
    } else {
      Vec z(n);
      z[y] = 1;
      zero_gens.push_back(std::move(z));
    }
  }

  MatsuoEigenbasis out{Subspace::span(n, one_gens), Subspace::span(n, zero_gens),
                       Subspace::span(n, alpha_gens)};

  Vec axis(n);
  axis[x] = 1;
  if (out.one != eigenspace(ma.axial.algebra, axis, Rational(1)) ||
      out.zero != eigenspace(ma.axial.algebra, axis, Rational(0)) ||
      out.alpha != eigenspace(ma.axial.algebra, axis, alpha)) {
    throw Error(Errc::internal, "spanning sets disagree with kernel eigenspaces");
  }
  if (out.one.dim() + out.zero.dim() + out.alpha.dim() != n) {
    throw Error(Errc::internal, "eigenspace dimensions do not sum to the algebra dimension");
  }
  return out;
}

Matrix frobenius_gram(const FischerSpace& fs, const Rational& alpha) {
  Matrix gram = collinearity_matrix(fs).scaled(alpha / 2);
  for (std::size_t i = 0; i < fs.n_points(); ++i) gram.at(i, i) = 1;
  return gram;
}

FrobeniusReport frobenius_check(const AxialAlgebra& aa, const Matrix& gram) {
  const std::size_t n = aa.algebra.dim();
  if (!gram.is_square() || gram.rows() != n) {
    throw Error(Errc::dimension_mismatch, "gram size");
  }
  if (!gram.is_symmetric()) throw Error(Errc::bad_parameter, "gram not symmetric");

  FrobeniusReport report;
  report.associative = true;
  auto pairing = [&](const Vec& u, const Vec& v) {
    Rational s = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (u[i] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (v[j] != 0 && gram.at(i, j) != 0) s += u[i] * gram.at(i, j) * v[j];
      }
    }
    return s;
  };
  for (std::size_t x = 0; x < n && report.associative; ++x) {
    Vec ex(n);
    ex[x] = 1;
    for (std::size_t a = 0; a < n && report.associative; ++a) {
      Vec ea(n);
      ea[a] = 1;
      Vec xa = aa.algebra.mul(ex, ea);
      for (std::size_t b = 0; b < n; ++b) {
        Vec eb(n);
        eb[b] = 1;
        Vec xb = aa.algebra.mul(ex, eb);
        if (pairing(xa, eb) != pairing(ea, xb)) {
          report.associative = false;
          break;
        }
      }
    }
  }

  report.eigen_orthogonal = true;
  for (const auto& axis : aa.axes) {
    std::vector<std::vector<Vec>> eig;
    for (std::size_t i = 0; i < aa.rule.size(); ++i) {
      eig.push_back(eigenspace(aa.algebra, axis, aa.rule.eigenvalue(i)).basis_vectors());
    }
    for (std::size_t i = 0; i < eig.size() && report.eigen_orthogonal; ++i) {
      for (std::size_t j = i + 1; j < eig.size() && report.eigen_orthogonal; ++j) {
        for (const auto& u : eig[i]) {
          for (const auto& v : eig[j]) {
            if (pairing(u, v) != 0) {
              report.eigen_orthogonal = false;
              break;
            }
          }
          if (!report.eigen_orthogonal) break;
        }
      }
    }
    if (!report.eigen_orthogonal) break;
  }

  report.gram_det = det(gram);
  report.nondegenerate = (report.gram_det != 0);
  return report;
}

std::optional<Vec> unit_element(const FischerSpace& fs, const Rational& alpha) {
  if (!is_connected(fs.geometry())) {
    throw Error(Errc::not_connected, "unit element needs a connected space");
  }
  const std::size_t n = fs.n_points();
  // Lines-per-point is constant on a connected space.
  const std::size_t d = fs.lines_through(0);
  for (std::size_t x = 1; x < n; ++x) {
    if (fs.lines_through(x) != d) {
      throw Error(Errc::internal, "line count not constant on a connected space");
    }
  }
  MatsuoAlgebra ma = matsuo(fs, alpha);
  Vec all(n, Rational(1));
  const Rational factor = 1 + alpha * Rational(d);
  if (factor == 0) {
    for (std::size_t a = 0; a < n; ++a) {
      Vec ea(n);
      ea[a] = 1;
      if (!vec_is_zero(ma.axial.algebra.mul(all, ea))) {
        throw Error(Errc::internal, "sum vector does not span a submodule");
      }
    }
    return std::nullopt;
  }
  Vec unit = vec_scaled(all, Rational(1) / factor);
  for (std::size_t a = 0; a < n; ++a) {
    Vec ea(n);
    ea[a] = 1;
    if (ma.axial.algebra.mul(unit, ea) != ea) {
      throw Error(Errc::internal, "computed unit fails unit law");
    }
  }
  return unit;
}

AxialAlgebra clifford_example() {
  // Basis (1, u, v).
  Algebra alg;
  alg.basis = {"one", "u", "v"};
  alg.products.assign(3, std::vector<Vec>(3, Vec(3)));
  auto set_product = [&](std::size_t i, std::size_t j, Vec value) {
    alg.products[i][j] = value;
    alg.products[j][i] = std::move(value);
  };
  set_product(0, 0, {1, 0, 0});
  set_product(0, 1, {0, 1, 0});
  set_product(0, 2, {0, 0, 1});
  set_product(1, 1, {1, 0, 0});
  set_product(2, 2, {1, 0, 0});
  set_product(1, 2, {0, 0, 0});

  const Rational half(1, 2);
  std::vector<Vec> axes = {
      {half, half, 0},
      {half, -half, 0},
      {half, 0, half},
      {half, 0, -half},
  };
  return AxialAlgebra{std::move(alg), std::move(axes), jordan_rule(half)};
}

}  // namespace axial
