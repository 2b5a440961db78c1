#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "axial/algebra.hpp"
#include "axial/group.hpp"

namespace axial {

// Presentation on involutive generators: every generator is its own inverse,
// squares are listed as relators, and one conjugation relator
// t_y t_x t_y t_{x^{tau_y}} is listed per ordered pair (x, y).
struct Presentation {
  std::vector<std::string> generators;
  std::vector<std::vector<std::size_t>> relators;
};

/// Generators indexed by the axes; the conjugation action is resolved by
/// applying each Miyamoto matrix to each axis and locating the image.
/// Throws Errc::not_closed / Errc::image_not_in_omega / Errc::no_grading.
Presentation build_presentation(const AxialAlgebra& aa);

// Completed coset table over the trivial subgroup: rows are the group
// elements, row 0 the identity, columns the right multiplication by each
// generator. Each element carries a breadth-first witness word.
class UniversalGroup {
public:
  UniversalGroup(std::vector<std::string> gen_labels, std::vector<std::vector<std::size_t>> table);

  std::size_t order() const { return table_.size(); }
  std::size_t n_generators() const { return gen_labels_.size(); }
  const std::vector<std::string>& generator_labels() const { return gen_labels_; }

  std::size_t step(std::size_t element, std::size_t gen) const { return table_[element][gen]; }
  std::size_t element_of_word(const std::vector<std::size_t>& word) const;
  std::size_t mul(std::size_t a, std::size_t b) const;
  std::size_t inv(std::size_t a) const;
  std::size_t conj(std::size_t x, std::size_t by) const;
  std::size_t generator_element(std::size_t gen) const { return table_[0][gen]; }
  const std::vector<std::size_t>& word_of(std::size_t element) const { return words_[element]; }

  /// Right multiplication by a generator as a permutation of the elements.
  Permutation generator_permutation(std::size_t gen) const;

  /// The full table as rows of images, for reporting.
  const std::vector<std::vector<std::size_t>>& table() const { return table_; }

  /// Elements in breadth-first discovery order (identity first).
  const std::vector<std::size_t>& bfs_order() const { return bfs_order_; }

private:
  std::vector<std::string> gen_labels_;
  std::vector<std::vector<std::size_t>> table_;
  std::vector<std::vector<std::size_t>> words_;
  std::vector<std::size_t> bfs_order_;
};

/// Coset enumeration over the trivial subgroup: relator scanning with
/// immediate coincidence handling; new cosets are defined at the lowest
/// undefined table entry, so the table is deterministic.
/// Throws Errc::cap_exceeded.
UniversalGroup todd_coxeter(const Presentation& p, std::size_t cap = 100000);

/// Independent order count: breadth-first closure of reduced words under
/// appending generators, followed by relator-trace merging. Intended for
/// small instances. Throws Errc::cap_exceeded.
std::size_t word_enum_oracle(const Presentation& p, std::size_t cap = 100000);

struct TauReport {
  std::vector<std::size_t> kernel;  // element indices mapping to the identity
  bool central = false;
  bool kernel_equals_center = false;
  std::size_t center_order = 0;
  std::size_t miyamoto_order = 0;
};

/// The map t_e ↦ tau_e evaluated on witness words; the kernel must be
/// central, and must equal the center when the representation is of unique
/// type.
TauReport tau_epimorphism(const UniversalGroup& u, const AxialAlgebra& aa);

struct UttgReport {
  bool is_ttg = false;
  bool geometry_iso = false;
  std::size_t u_order = 0;
};

/// The generators of U form a conjugation-closed class of involutions with
/// products of order at most 3, and x ↦ t_x is a geometry isomorphism onto
/// the transposition geometry of U. Throws Errc::has_isolated_points.
UttgReport universal_ttg_check(const FischerSpace& fs, std::size_t cap = 100000);

struct ThetaReport {
  bool is_epi = false;
  bool quotient_orders_match = false;
  std::size_t u_mod_center = 0;
  std::size_t target_mod_center = 0;
};

/// phi maps point index -> element index of target.group and must be a
/// geometry isomorphism onto g(target). Throws Errc::phi_not_isomorphism.
ThetaReport theta_epimorphism(const UniversalGroup& u, const FischerSpace& fs,
                              const ThreeTranspositionGroup& target,
                              const std::vector<std::size_t>& phi);

/// U realized as a permutation group via the regular action of its
/// generators; order must equal the table size.
EnumeratedGroup regular_action_group(const UniversalGroup& u);

}  // namespace axial
