#pragma once

#include <cstddef>
#include <vector>

#include "axial/matrix.hpp"

namespace axial {

// Row space in canonical form: basis rows form the reduced row-echelon form
// with zero rows dropped, so two subspaces are equal iff their bases are
// entry-wise equal.
class Subspace {
public:
  Subspace() = default;

  static Subspace zero(std::size_t ambient_dim);
  static Subspace full(std::size_t ambient_dim);
  static Subspace span(std::size_t ambient_dim, const std::vector<Vec>& generators);
  static Subspace row_space(const Matrix& m);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }
  std::vector<Vec> basis_vectors() const;

  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;
  bool operator==(const Subspace& rhs) const = default;

private:
  std::size_t ambient_ = 0;
  Matrix basis_;  // dim x ambient, RREF, no zero rows
};

struct SubspaceRelation {
  bool contains = false;  // a ⊇ b
  bool equal = false;
  Subspace sum;
  Subspace intersection;
};

/// Throws Errc::ambient_mismatch when ambient dimensions differ.
SubspaceRelation subspace_relate(const Subspace& a, const Subspace& b);

Subspace subspace_sum(const Subspace& a, const Subspace& b);
Subspace subspace_intersection(const Subspace& a, const Subspace& b);

/// Null space {v : m v = 0} as a canonical subspace of dimension cols - rank.
Subspace kernel(const Matrix& m);

}  // namespace axial
