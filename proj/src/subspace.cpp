#include "axial/subspace.hpp"

#include "axial/error.hpp"

namespace axial {

namespace {

Matrix drop_zero_rows(const Matrix& m) {
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Vec r = m.row(i);
    if (!vec_is_zero(r)) rows.push_back(std::move(r));
  }
  Matrix out(rows.size(), m.cols());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out.at(i, j) = rows[i][j];
  }
  return out;
}

}  // namespace

Subspace Subspace::zero(std::size_t ambient_dim) {
  Subspace s;
  s.ambient_ = ambient_dim;
  s.basis_ = Matrix(0, ambient_dim);
  return s;
}

Subspace Subspace::full(std::size_t ambient_dim) {
  Subspace s;
  s.ambient_ = ambient_dim;
  s.basis_ = Matrix::identity(ambient_dim);
  return s;
}

Subspace Subspace::span(std::size_t ambient_dim, const std::vector<Vec>& generators) {
  if (generators.empty()) return zero(ambient_dim);
  for (const auto& g : generators) {
    if (g.size() != ambient_dim) throw Error(Errc::dimension_mismatch, "generator size");
  }
  Subspace s;
  s.ambient_ = ambient_dim;
  s.basis_ = drop_zero_rows(rref(Matrix::from_rows(generators)));
  return s;
}

Subspace Subspace::row_space(const Matrix& m) {
  Subspace s;
  s.ambient_ = m.cols();
  s.basis_ = drop_zero_rows(rref(m));
  return s;
}

std::vector<Vec> Subspace::basis_vectors() const {
  std::vector<Vec> rows;
  rows.reserve(basis_.rows());
  for (std::size_t i = 0; i < basis_.rows(); ++i) rows.push_back(basis_.row(i));
  return rows;
}

bool Subspace::contains(const Vec& v) const {
  if (v.size() != ambient_) throw Error(Errc::ambient_mismatch, "vector size");
  // Reduce v against the RREF basis; membership iff the remainder vanishes.
  Vec r = v;
  for (std::size_t i = 0; i < basis_.rows(); ++i) {
    std::size_t pivot = 0;
    while (pivot < ambient_ && basis_.at(i, pivot) == 0) ++pivot;
    if (pivot == ambient_) continue;
    if (r[pivot] == 0) continue;
    const Rational factor = r[pivot];
    for (std::size_t j = pivot; j < ambient_; ++j) r[j] -= factor * basis_.at(i, j);
  }
  return vec_is_zero(r);
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw Error(Errc::ambient_mismatch, "subspace ambients");
  for (std::size_t i = 0; i < other.basis_.rows(); ++i) {
    if (!contains(other.basis_.row(i))) return false;
  }
  return true;
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw Error(Errc::ambient_mismatch, "subspace sum");
  std::vector<Vec> gens = a.basis_vectors();
  for (auto& v : b.basis_vectors()) gens.push_back(std::move(v));
  return Subspace::span(a.ambient_dim(), gens);
}

Subspace subspace_intersection(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) {
    throw Error(Errc::ambient_mismatch, "subspace intersection");
  }
  const std::size_t n = a.ambient_dim();
  // Zassenhaus block trick: reduce [A A; B 0]; rows with zero left block carry
  // an intersection basis in the right block.
  Matrix block(a.dim() + b.dim(), 2 * n);
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      block.at(i, j) = a.basis().at(i, j);
      block.at(i, n + j) = a.basis().at(i, j);
    }
  }
  for (std::size_t i = 0; i < b.dim(); ++i) {
    for (std::size_t j = 0; j < n; ++j) block.at(a.dim() + i, j) = b.basis().at(i, j);
  }
  block = rref(std::move(block));
  std::vector<Vec> inter;
  for (std::size_t i = 0; i < block.rows(); ++i) {
    bool left_zero = true;
    for (std::size_t j = 0; j < n; ++j) {
      if (block.at(i, j) != 0) {
        left_zero = false;
        break;
      }
    }
    if (!left_zero) continue;
    Vec v(n);
    bool nonzero = false;
    for (std::size_t j = 0; j < n; ++j) {
      v[j] = block.at(i, n + j);
      if (v[j] != 0) nonzero = true;
    }
    if (nonzero) inter.push_back(std::move(v));
  }
  return Subspace::span(n, inter);
}

SubspaceRelation subspace_relate(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw Error(Errc::ambient_mismatch, "subspace relate");
  SubspaceRelation rel;
  rel.sum = subspace_sum(a, b);
  rel.intersection = subspace_intersection(a, b);
  rel.contains = a.contains(b);
  rel.equal = (a == b);
  if (rel.sum.dim() + rel.intersection.dim() != a.dim() + b.dim()) {
    throw Error(Errc::internal, "modular law violated in subspace_relate");
  }
  return rel;
}

Subspace kernel(const Matrix& m) {
  const std::size_t n = m.cols();
  Matrix r = rref(m);
  std::vector<std::size_t> pivot_col;
  std::vector<bool> is_pivot(n, false);
  for (std::size_t i = 0; i < r.rows(); ++i) {
    std::size_t j = 0;
    while (j < n && r.at(i, j) == 0) ++j;
    if (j < n) {
      pivot_col.push_back(j);
      is_pivot[j] = true;
    }
  }
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vec v(n);
    v[free] = 1;
    for (std::size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = -r.at(i, free);
    basis.push_back(std::move(v));
  }
  return Subspace::span(n, basis);
}

}  // namespace axial
