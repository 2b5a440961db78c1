#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "axial/matrix.hpp"

namespace axial {

class Permutation;

// Points are opaque labels ordered by input; lines are stored as sorted
// index sets. All matrices produced downstream index points in this order.
struct PointLineGeometry {
  std::vector<std::string> points;
  std::vector<std::vector<std::size_t>> lines;

  static PointLineGeometry from_labels(std::vector<std::string> point_labels,
                                       const std::vector<std::vector<std::string>>& line_labels);

  std::size_t n_points() const { return points.size(); }
  std::size_t index_of(const std::string& label) const;  // throws Errc::unknown_point
  bool has_line(const std::vector<std::size_t>& sorted_line) const;

  bool operator==(const PointLineGeometry& rhs) const = default;
};

struct GeometryWitness {
  std::string reason;
  std::vector<std::size_t> line_a;
  std::vector<std::size_t> line_b;  // empty when a single line is at fault
};

struct ValidationReport {
  bool ok = false;
  std::optional<GeometryWitness> witness;
};

/// A partial triple system: every line has exactly three points and no two
/// distinct lines share two points.
ValidationReport validate_partial_triple_system(const PointLineGeometry& g);

/// Least subspace of g containing the seeds: a line joins as soon as two of
/// its points are in the current point set, together with its third point.
PointLineGeometry generated_subspace(const PointLineGeometry& g,
                                     const std::set<std::size_t>& seed_points,
                                     const std::set<std::size_t>& seed_lines);

/// Every pair of distinct intersecting lines must generate a subspace
/// isomorphic to one of the two stored templates (6 or 9 points).
/// Throws Errc::not_partial_triple_system when the precondition fails.
ValidationReport is_fischer_space(const PointLineGeometry& g);

struct Components {
  std::vector<PointLineGeometry> components;  // non-isolated classes with their lines
  std::vector<std::size_t> isolated;          // points on no line with another point
};

Components connected_components(const PointLineGeometry& g);

/// The same geometry with isolated points dropped.
PointLineGeometry without_isolated(const PointLineGeometry& g);

bool is_connected(const PointLineGeometry& g);

/// Exhaustive backtracking isomorphism test; intended for small geometries.
bool geometries_isomorphic(const PointLineGeometry& a, const PointLineGeometry& b);

// Validated Fischer space with the wedge map x∧y on collinear pairs.
class FischerSpace {
public:
  explicit FischerSpace(PointLineGeometry g);

  const PointLineGeometry& geometry() const { return g_; }
  std::size_t n_points() const { return g_.n_points(); }
  bool collinear(std::size_t x, std::size_t y) const;
  /// Third point on the line through collinear x and y.
  std::size_t wedge(std::size_t x, std::size_t y) const;  // throws Errc::unknown_line
  bool is_isolated(std::size_t x) const;
  /// Number of lines through x.
  std::size_t lines_through(std::size_t x) const;

private:
  PointLineGeometry g_;
  std::vector<std::size_t> wedge_;  // n*n table, npos when not collinear
  std::vector<std::size_t> line_count_;
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
};

/// y ↦ x∧y on the neighbours of x, identity elsewhere. An automorphism of
/// the geometry; an involution unless x is isolated.
Permutation point_tau(const FischerSpace& fs, std::size_t x);

/// Symmetric 0/1 matrix with zero diagonal; entry (i,j) = 1 iff i ∼ j.
Matrix collinearity_matrix(const FischerSpace& fs);

/// Built-in spaces: "dual_affine_2", "affine_3", "single_line",
/// "sym_transpositions" (requires n >= 3: points are the unordered pairs
/// {i,j}, lines the pair-triples inside a 3-subset).
FischerSpace catalog(const std::string& name, std::optional<int> n = std::nullopt);

/// The two templates used by is_fischer_space.
PointLineGeometry dual_affine_plane_2();
PointLineGeometry affine_plane_3();

}  // namespace axial
