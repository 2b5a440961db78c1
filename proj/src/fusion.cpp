#include "axial/fusion.hpp"

#include <algorithm>

#include "axial/error.hpp"

namespace axial {

FusionRule::FusionRule(std::vector<Rational> eigenvalues,
                       std::vector<std::vector<std::vector<std::size_t>>> star)
    : eigenvalues_(std::move(eigenvalues)), star_(std::move(star)) {
  const std::size_t n = eigenvalues_.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (eigenvalues_[i] == eigenvalues_[j]) {
        throw Error(Errc::bad_parameter, "repeated eigenvalue in fusion rule");
      }
    }
  }
  if (star_.size() != n) throw Error(Errc::bad_parameter, "star table size");
  for (std::size_t i = 0; i < n; ++i) {
    if (star_[i].size() != n) throw Error(Errc::bad_parameter, "star table size");
    for (std::size_t j = 0; j < n; ++j) {
      auto& cell = star_[i][j];
      std::sort(cell.begin(), cell.end());
      cell.erase(std::unique(cell.begin(), cell.end()), cell.end());
      for (std::size_t v : cell) {
        if (v >= n) throw Error(Errc::bad_parameter, "star entry out of range");
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (star_[i][j] != star_[j][i]) {
        throw Error(Errc::bad_parameter, "star table not symmetric");
      }
    }
  }
}

std::optional<std::size_t> FusionRule::index_of(const Rational& value) const {
  for (std::size_t i = 0; i < eigenvalues_.size(); ++i) {
    if (eigenvalues_[i] == value) return i;
  }
  return std::nullopt;
}

const std::vector<std::size_t>& FusionRule::star(std::size_t i, std::size_t j) const {
  return star_[i][j];
}

void FusionRule::set_grading(std::vector<std::size_t> plus, std::vector<std::size_t> minus) {
  std::vector<bool> seen(eigenvalues_.size(), false);
  for (std::size_t i : plus) {
    if (i >= eigenvalues_.size() || seen[i]) throw Error(Errc::not_a_partition, "plus part");
    seen[i] = true;
  }
  for (std::size_t i : minus) {
    if (i >= eigenvalues_.size() || seen[i]) throw Error(Errc::not_a_partition, "minus part");
    seen[i] = true;
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
    throw Error(Errc::not_a_partition, "grading does not cover all eigenvalues");
  }
  std::vector<bool> is_minus(eigenvalues_.size(), false);
  for (std::size_t i : minus) is_minus[i] = true;
  auto closed = [&](std::size_t i, std::size_t j, bool want_minus) {
    for (std::size_t k : star_[i][j]) {
      if (is_minus[k] != want_minus) return false;
    }
    return true;
  };
  for (std::size_t i = 0; i < eigenvalues_.size(); ++i) {
    for (std::size_t j = 0; j < eigenvalues_.size(); ++j) {
      bool want_minus = is_minus[i] != is_minus[j];
      if (!closed(i, j, want_minus)) {
        throw Error(Errc::not_a_partition, "grading violates star closure");
      }
    }
  }
  grading_ = {std::move(plus), std::move(minus)};
}

const std::vector<std::size_t>& FusionRule::plus() const {
  if (!grading_) throw Error(Errc::no_grading, "rule has no grading");
  return grading_->first;
}

const std::vector<std::size_t>& FusionRule::minus() const {
  if (!grading_) throw Error(Errc::no_grading, "rule has no grading");
  return grading_->second;
}

bool FusionRule::in_minus(std::size_t i) const {
  for (std::size_t m : minus()) {
    if (m == i) return true;
  }
  return false;
}

FusionRule jordan_rule(const Rational& alpha) {
  if (alpha == 0 || alpha == 1) throw Error(Errc::bad_alpha, "alpha must avoid 0 and 1");
  // Indices: 0 -> 1, 1 -> 0, 2 -> alpha.
  std::vector<std::vector<std::vector<std::size_t>>> star = {
      {{0}, {}, {2}},
      {{}, {1}, {2}},
      {{2}, {2}, {0, 1}},
  };
  FusionRule rule({Rational(1), Rational(0), alpha}, std::move(star));
  rule.set_grading({0, 1}, {2});
  return rule;
}

FusionRule griess_rule() {
  // Indices: 0 -> 1, 1 -> 0, 2 -> 1/4, 3 -> 1/32.
  std::vector<std::vector<std::vector<std::size_t>>> star = {
      {{0}, {}, {2}, {3}},
      {{}, {1}, {2}, {3}},
      {{2}, {2}, {0, 1}, {3}},
      {{3}, {3}, {3}, {0, 1, 2}},
  };
  FusionRule rule({Rational(1), Rational(0), Rational(1, 4), Rational(1, 32)}, std::move(star));
  rule.set_grading({0, 1, 2}, {3});
  return rule;
}

bool check_grading(const FusionRule& rule, const std::set<Rational>& plus,
                   const std::set<Rational>& minus) {
  std::vector<bool> covered(rule.size(), false);
  std::vector<bool> is_minus(rule.size(), false);
  for (const auto& v : plus) {
    auto idx = rule.index_of(v);
    if (!idx || covered[*idx]) throw Error(Errc::not_a_partition, "plus part");
    covered[*idx] = true;
  }
  for (const auto& v : minus) {
    auto idx = rule.index_of(v);
    if (!idx || covered[*idx]) throw Error(Errc::not_a_partition, "minus part");
    covered[*idx] = true;
    is_minus[*idx] = true;
  }
  if (std::find(covered.begin(), covered.end(), false) != covered.end()) {
    throw Error(Errc::not_a_partition, "parts do not cover the eigenvalues");
  }
  for (std::size_t i = 0; i < rule.size(); ++i) {
    for (std::size_t j = 0; j < rule.size(); ++j) {
      bool want_minus = is_minus[i] != is_minus[j];
      for (std::size_t k : rule.star(i, j)) {
        if (is_minus[k] != want_minus) return false;
      }
    }
  }
  return true;
}

}  // namespace axial
