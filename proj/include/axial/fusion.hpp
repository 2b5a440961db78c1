#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <vector>

#include "axial/rational.hpp"

namespace axial {

// Eigenvalue set with a symmetric star table; entries are index sets into
// the eigenvalue list. An optional sign partition (plus, minus) makes the
// rule graded.
class FusionRule {
public:
  FusionRule(std::vector<Rational> eigenvalues,
             std::vector<std::vector<std::vector<std::size_t>>> star);

  std::size_t size() const { return eigenvalues_.size(); }
  const std::vector<Rational>& eigenvalues() const { return eigenvalues_; }
  const Rational& eigenvalue(std::size_t i) const { return eigenvalues_[i]; }
  std::optional<std::size_t> index_of(const Rational& value) const;

  const std::vector<std::size_t>& star(std::size_t i, std::size_t j) const;

  void set_grading(std::vector<std::size_t> plus, std::vector<std::size_t> minus);
  bool graded() const { return grading_.has_value(); }
  const std::vector<std::size_t>& plus() const;
  const std::vector<std::size_t>& minus() const;
  bool in_minus(std::size_t i) const;

private:
  std::vector<Rational> eigenvalues_;
  std::vector<std::vector<std::vector<std::size_t>>> star_;
  std::optional<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> grading_;
};

/// Eigenvalues {1, 0, alpha} with the three-value sign-rule table and the
/// grading ({1,0}, {alpha}). Throws Errc::bad_alpha for alpha in {0, 1}.
FusionRule jordan_rule(const Rational& alpha);

/// The four-eigenvalue table {1, 0, 1/4, 1/32} with grading
/// ({1, 0, 1/4}, {1/32}). Shipped as data for grading checks only.
FusionRule griess_rule();

/// True iff (plus, minus) partitions the eigenvalues and the three sign
/// closure conditions hold. Throws Errc::not_a_partition.
bool check_grading(const FusionRule& rule, const std::set<Rational>& plus,
                   const std::set<Rational>& minus);

}  // namespace axial
