#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "axial/geometry.hpp"
#include "axial/matrix.hpp"

namespace axial {

struct AxialAlgebra;

// Permutations act on the right: apply(x) is x^p and (p*q) applies p first.
class Permutation {
public:
  Permutation() = default;
  explicit Permutation(std::vector<std::size_t> images);
  static Permutation identity(std::size_t degree);

  std::size_t degree() const { return images_.size(); }
  std::size_t apply(std::size_t x) const;
  const std::vector<std::size_t>& images() const { return images_; }

  Permutation operator*(const Permutation& rhs) const;
  Permutation inverse() const;
  bool is_identity() const;
  std::size_t order() const;

  bool operator==(const Permutation& rhs) const = default;
  bool operator<(const Permutation& rhs) const { return images_ < rhs.images_; }

private:
  std::vector<std::size_t> images_;
};

enum class GroupKind { permutation, matrix };

using GroupElement = std::variant<Permutation, Matrix>;

/// a-then-b composition (right action convention).
GroupElement element_mul(const GroupElement& a, const GroupElement& b);
GroupElement element_inverse(const GroupElement& a);
bool element_is_identity(const GroupElement& a);
bool element_less(const GroupElement& a, const GroupElement& b);
std::size_t element_order(const GroupElement& a);

// A finite group listed explicitly by breadth-first closure of its
// generators; elements[0] is the identity and every element carries one
// witness word in generator indices.
struct EnumeratedGroup {
  GroupKind kind = GroupKind::permutation;
  std::vector<std::string> gen_labels;
  std::vector<GroupElement> generators;
  std::vector<GroupElement> elements;
  std::vector<std::vector<std::size_t>> words;

  std::size_t order() const { return elements.size(); }
  std::optional<std::size_t> index_of(const GroupElement& e) const;
  std::size_t mul(std::size_t a, std::size_t b) const;
  std::size_t inv(std::size_t a) const;
  std::size_t conj(std::size_t x, std::size_t by) const;

  // Lazily built lookup from element value to index.
  mutable std::map<Matrix, std::size_t> matrix_index_;
  mutable std::map<Permutation, std::size_t> perm_index_;
};

/// Breadth-first closure; throws Errc::cap_exceeded past the safety cap.
EnumeratedGroup enumerate(GroupKind kind, std::vector<std::string> labels,
                          std::vector<GroupElement> generators, std::size_t cap = 1000000);

/// Indices of the elements commuting with every generator.
std::vector<std::size_t> center(const EnumeratedGroup& g);

/// Subgroup of all elements commuting with x, with inherited witness words.
EnumeratedGroup centralizer(const EnumeratedGroup& g, const GroupElement& x);

struct ThreeTranspositionGroup {
  EnumeratedGroup group;
  std::vector<std::size_t> d_class;  // indices into group.elements
};

struct TTGReport {
  bool ok = false;
  std::string witness;
};

/// Involutions, generation, conjugation closure, order(cd) <= 3.
TTGReport is_3transposition(const EnumeratedGroup& g, const std::vector<std::size_t>& d);

struct MiyamotoGroup {
  EnumeratedGroup matrices;                       // matrix action on the algebra
  std::optional<EnumeratedGroup> point_action;    // for Matsuo algebras
  std::vector<Matrix> axis_involutions;           // tau per axis, in axis order
};

/// Group generated by the Miyamoto involutions of all axes.
/// Throws Errc::no_grading / Errc::not_closed.
MiyamotoGroup miyamoto_group(const AxialAlgebra& aa, std::size_t cap = 1000000);

/// Permutation 3-transposition group generated by the nontrivial point maps.
ThreeTranspositionGroup f_map(const FischerSpace& fs);

/// Points are the elements of D, lines the order-3 triples {c, d, c^d}.
/// Point labels are "d<i>" with i the position in d_class.
PointLineGeometry g_map(const ThreeTranspositionGroup& t);

/// Quotient by the center, realized by the right-multiplication action on
/// central cosets; D maps to the nontrivial images of d_class.
ThreeTranspositionGroup center_reduce(const ThreeTranspositionGroup& t);

struct BuekenhoutReport {
  bool geometry_roundtrip = false;  // canonical x ↦ tau_x : G° → g(f(G)) is an isomorphism
  bool group_roundtrip = false;     // canonical d ↦ tau_d : (G,D)° ≅ f(g(G,D))
};

BuekenhoutReport buekenhout_roundtrip(const FischerSpace& fs);

/// Dual direction for an arbitrary 3-transposition group.
bool buekenhout_group_roundtrip(const ThreeTranspositionGroup& t);

/// Distinct axes give distinct Miyamoto involutions. Throws Errc::no_grading.
bool unique_type_check(const AxialAlgebra& aa);

struct TransitivityReport {
  bool connected = false;
  bool transitive = false;
  bool d_single_class = false;
};

/// The three statements are computed independently; they must agree.
/// Throws Errc::has_isolated_points.
TransitivityReport transitivity_equivalences(const FischerSpace& fs);

}  // namespace axial
