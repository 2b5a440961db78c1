#include "axial/universal.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "axial/error.hpp"

namespace axial {

Presentation build_presentation(const AxialAlgebra& aa) {
  if (!aa.rule.graded()) throw Error(Errc::no_grading, "presentation needs a graded rule");
  ClosureReport closure = miyamoto_closed(aa);
  if (!closure.ok) throw Error(Errc::not_closed, "axis set is not Miyamoto-closed");

  const std::size_t n = aa.axes.size();
  std::vector<Matrix> taus;
  taus.reserve(n);
  for (std::size_t i = 0; i < n; ++i) taus.push_back(miyamoto_matrix(aa, i));

  auto locate = [&](const Vec& v) {
    for (std::size_t i = 0; i < n; ++i) {
      if (aa.axes[i] == v) return i;
    }
    throw Error(Errc::image_not_in_omega, "axis image is not an axis");
  };

  Presentation p;
  for (std::size_t i = 0; i < n; ++i) p.generators.push_back("t_" + std::to_string(i));
  for (std::size_t i = 0; i < n; ++i) p.relators.push_back({i, i});
  for (std::size_t y = 0; y < n; ++y) {
    for (std::size_t x = 0; x < n; ++x) {
      std::size_t image = locate(taus[y].apply(aa.axes[x]));
      p.relators.push_back({y, x, y, image});
    }
  }
  return p;
}

namespace {

// Coset table with union-find coincidence handling. Generators are
// involutions, so each column is its own inverse column.
class CosetTable {
public:
  CosetTable(std::size_t n_gens, const std::vector<std::vector<std::size_t>>& relators,
             std::size_t cap)
      : n_gens_(n_gens), relators_(relators), cap_(cap) {
    add_coset();
  }

  void enumerate() {
    for (;;) {
      scan_to_fixpoint();
      auto slot = lowest_undefined();
      if (!slot) break;
      auto [c, g] = *slot;
      std::size_t fresh = add_coset();
      table_[c][g] = static_cast<long>(fresh);
      table_[fresh][g] = static_cast<long>(c);
    }
  }

  std::vector<std::vector<std::size_t>> compact() const {
    std::vector<std::size_t> remap(table_.size(), 0);
    std::size_t live = 0;
    for (std::size_t c = 0; c < table_.size(); ++c) {
      if (parent_[c] == c) remap[c] = live++;
    }
    std::vector<std::vector<std::size_t>> out(live, std::vector<std::size_t>(n_gens_));
    for (std::size_t c = 0; c < table_.size(); ++c) {
      if (parent_[c] != c) continue;
      for (std::size_t g = 0; g < n_gens_; ++g) {
        long image = table_[c][g];
        if (image < 0) throw Error(Errc::internal, "incomplete coset table");
        out[remap[c]][g] = remap[rep(static_cast<std::size_t>(image))];
      }
    }
    return out;
  }

private:
  std::size_t add_coset() {
    if (live_ >= cap_) throw Error(Errc::cap_exceeded, "coset cap exceeded");
    table_.emplace_back(n_gens_, -1);
    parent_.push_back(table_.size() - 1);
    ++live_;
    return table_.size() - 1;
  }

  std::size_t rep(std::size_t c) const {
    while (parent_[c] != c) {
      parent_[c] = parent_[parent_[c]];
      c = parent_[c];
    }
    return c;
  }

  void merge(std::size_t a, std::size_t b) {
    a = rep(a);
    b = rep(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent_[b] = a;
    --live_;
    queue_.push_back(b);
  }

  void process_coincidences() {
    while (!queue_.empty()) {
      std::size_t dead = queue_.front();
      queue_.pop_front();
      for (std::size_t g = 0; g < n_gens_; ++g) {
        long image = table_[dead][g];
        if (image < 0) continue;
        table_[dead][g] = -1;
        std::size_t other = static_cast<std::size_t>(image);
        if (table_[other][g] == static_cast<long>(dead)) table_[other][g] = -1;
        std::size_t a = rep(dead);
        std::size_t b = rep(other);
        if (table_[a][g] >= 0) {
          merge(b, static_cast<std::size_t>(table_[a][g]));
        } else if (table_[b][g] >= 0) {
          merge(a, static_cast<std::size_t>(table_[b][g]));
        } else {
          table_[a][g] = static_cast<long>(b);
          table_[b][g] = static_cast<long>(a);
        }
      }
    }
  }

  // Scan one relator at one live coset; may deduce or merge.
  bool scan(std::size_t c, const std::vector<std::size_t>& word) {
    std::size_t f = c;
    std::size_t i = 0;
    while (i < word.size() && table_[f][word[i]] >= 0) {
      f = rep(static_cast<std::size_t>(table_[f][word[i]]));
      ++i;
    }
    if (i == word.size()) {
      if (f != c) {
        merge(f, c);
        process_coincidences();
        return true;
      }
      return false;
    }
    std::size_t b = c;
    long j = static_cast<long>(word.size()) - 1;
    while (j >= static_cast<long>(i) && table_[b][word[j]] >= 0) {
      b = rep(static_cast<std::size_t>(table_[b][word[j]]));
      --j;
    }
    if (j < static_cast<long>(i)) {
      // Scans met; a mismatch is a coincidence.
      if (f != b) {
        merge(f, b);
        process_coincidences();
        return true;
      }
      return false;
    }
    if (j == static_cast<long>(i)) {
      // Gap of one: both sides of the missing entry are known.
      table_[f][word[i]] = static_cast<long>(b);
      table_[b][word[i]] = static_cast<long>(f);
      return true;
    }
    return false;
  }

  void scan_to_fixpoint() {
    bool progress = true;
    while (progress) {
      progress = false;
      for (std::size_t c = 0; c < table_.size(); ++c) {
        if (parent_[c] != c) continue;
        for (const auto& relator : relators_) {
          if (parent_[c] != c) break;
          if (scan(c, relator)) progress = true;
        }
      }
    }
  }

  std::optional<std::pair<std::size_t, std::size_t>> lowest_undefined() const {
    for (std::size_t c = 0; c < table_.size(); ++c) {
      if (parent_[c] != c) continue;
      for (std::size_t g = 0; g < n_gens_; ++g) {
        if (table_[c][g] < 0) return std::make_pair(c, g);
      }
    }
    return std::nullopt;
  }

  std::size_t n_gens_;
  const std::vector<std::vector<std::size_t>>& relators_;
  std::size_t cap_;
  std::vector<std::vector<long>> table_;
  mutable std::vector<std::size_t> parent_;
  std::deque<std::size_t> queue_;
  std::size_t live_ = 0;
};

}  // namespace

UniversalGroup::UniversalGroup(std::vector<std::string> gen_labels,
                               std::vector<std::vector<std::size_t>> table)
    : gen_labels_(std::move(gen_labels)), table_(std::move(table)) {
  // Witness words by breadth-first search from the identity row.
  words_.assign(table_.size(), {});
  std::vector<bool> seen(table_.size(), false);
  std::deque<std::size_t> queue;
  if (!table_.empty()) {
    seen[0] = true;
    queue.push_back(0);
    bfs_order_.push_back(0);
  }
  while (!queue.empty()) {
    std::size_t c = queue.front();
    queue.pop_front();
    for (std::size_t g = 0; g < gen_labels_.size(); ++g) {
      std::size_t d = table_[c][g];
      if (!seen[d]) {
        seen[d] = true;
        words_[d] = words_[c];
        words_[d].push_back(g);
        queue.push_back(d);
        bfs_order_.push_back(d);
      }
    }
  }
  if (bfs_order_.size() != table_.size()) throw Error(Errc::internal, "coset table not transitive");
}

std::size_t UniversalGroup::element_of_word(const std::vector<std::size_t>& word) const {
  std::size_t c = 0;
  for (std::size_t g : word) {
    if (g >= n_generators()) throw Error(Errc::bad_parameter, "generator index");
    c = table_[c][g];
  }
  return c;
}

std::size_t UniversalGroup::mul(std::size_t a, std::size_t b) const {
  std::size_t c = a;
  for (std::size_t g : words_[b]) c = table_[c][g];
  return c;
}

std::size_t UniversalGroup::inv(std::size_t a) const {
  // Generators are involutions, so the reversed witness word inverts.
  std::size_t c = 0;
  const auto& w = words_[a];
  for (auto it = w.rbegin(); it != w.rend(); ++it) c = table_[c][*it];
  return c;
}

std::size_t UniversalGroup::conj(std::size_t x, std::size_t by) const {
  return mul(mul(inv(by), x), by);
}

Permutation UniversalGroup::generator_permutation(std::size_t gen) const {
  std::vector<std::size_t> images(order());
  for (std::size_t c = 0; c < order(); ++c) images[c] = table_[c][gen];
  return Permutation(std::move(images));
}

UniversalGroup todd_coxeter(const Presentation& p, std::size_t cap) {
  for (const auto& relator : p.relators) {
    for (std::size_t g : relator) {
      if (g >= p.generators.size()) throw Error(Errc::bad_parameter, "relator generator index");
    }
  }
  CosetTable table(p.generators.size(), p.relators, cap);
  table.enumerate();
  UniversalGroup u(p.generators, table.compact());
  // The completed table must satisfy every relator at every element.
  for (std::size_t c = 0; c < u.order(); ++c) {
    for (const auto& relator : p.relators) {
      std::size_t walk = c;
      for (std::size_t g : relator) walk = u.step(walk, g);
      if (walk != c) throw Error(Errc::internal, "coset table violates a relator");
    }
  }
  return u;
}

namespace {

// Conjugation action x ↦ x^{tau_y} recovered from the length-4 relators.
std::vector<std::vector<std::size_t>> conjugation_action(const Presentation& p) {
  const std::size_t n = p.generators.size();
  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  std::vector<std::vector<std::size_t>> action(n, std::vector<std::size_t>(n, unset));
  for (const auto& relator : p.relators) {
    if (relator.size() == 4 && relator[0] == relator[2]) {
      std::size_t y = relator[0];
      std::size_t x = relator[1];
      std::size_t image = relator[3];
      if (action[y][x] != unset && action[y][x] != image) {
        throw Error(Errc::bad_parameter, "conflicting conjugation relators");
      }
      action[y][x] = image;
    }
  }
  for (std::size_t y = 0; y < n; ++y) {
    // Self-conjugation is trivial for involutive generators.
    if (action[y][y] == unset) action[y][y] = y;
    for (std::size_t x = 0; x < n; ++x) {
      if (action[y][x] == unset) {
        throw Error(Errc::bad_parameter, "missing conjugation relator");
      }
    }
  }
  return action;
}

std::vector<std::size_t> reduce_word(std::vector<std::size_t> word,
                                     const std::vector<std::vector<std::size_t>>& action) {
  for (;;) {
    // Cancel adjacent equal letters.
    std::vector<std::size_t> stack;
    for (std::size_t letter : word) {
      if (!stack.empty() && stack.back() == letter) {
        stack.pop_back();
      } else {
        stack.push_back(letter);
      }
    }
    word = std::move(stack);
    // Leftmost repeated letter: t_x u t_x -> u twisted by tau_x.
    constexpr std::size_t unset = static_cast<std::size_t>(-1);
    std::size_t i = unset;
    std::size_t j = unset;
    for (std::size_t a = 0; a < word.size() && i == unset; ++a) {
      for (std::size_t b = a + 1; b < word.size(); ++b) {
        if (word[a] == word[b]) {
          i = a;
          j = b;
          break;
        }
      }
    }
    if (i == unset) return word;
    std::vector<std::size_t> next(word.begin(), word.begin() + i);
    for (std::size_t k = i + 1; k < j; ++k) next.push_back(action[word[i]][word[k]]);
    next.insert(next.end(), word.begin() + j + 1, word.end());
    word = std::move(next);
  }
}

}  // namespace

std::size_t word_enum_oracle(const Presentation& p, std::size_t cap) {
  const std::size_t n = p.generators.size();
  auto action = conjugation_action(p);

  std::map<std::vector<std::size_t>, std::size_t> index;
  std::vector<std::vector<std::size_t>> states;
  std::vector<std::vector<std::size_t>> trans;

  auto intern = [&](std::vector<std::size_t> w) {
    auto it = index.find(w);
    if (it != index.end()) return it->second;
    if (states.size() >= cap) throw Error(Errc::cap_exceeded, "oracle state cap exceeded");
    std::size_t id = states.size();
    index.emplace(w, id);
    states.push_back(std::move(w));
    trans.emplace_back(n, static_cast<std::size_t>(-1));
    return id;
  };

  intern({});
  for (std::size_t s = 0; s < states.size(); ++s) {
    for (std::size_t g = 0; g < n; ++g) {
      std::vector<std::size_t> w = states[s];
      w.push_back(g);
      trans[s][g] = intern(reduce_word(std::move(w), action));
    }
  }

  // Reduction is sound but not confluent; merge states until every relator
  // traces back to its start everywhere.
  std::vector<std::size_t> parent(states.size());
  for (std::size_t s = 0; s < parent.size(); ++s) parent[s] = s;
  auto rep = [&](std::size_t s) {
    while (parent[s] != s) {
      parent[s] = parent[parent[s]];
      s = parent[s];
    }
    return s;
  };
  std::deque<std::pair<std::size_t, std::size_t>> merges;
  auto union_states = [&](std::size_t a, std::size_t b) {
    a = rep(a);
    b = rep(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent[b] = a;
    merges.emplace_back(a, b);
  };

  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t s = 0; s < states.size(); ++s) {
      if (rep(s) != s) continue;
      for (const auto& relator : p.relators) {
        std::size_t t = s;
        for (std::size_t g : relator) t = rep(trans[rep(t)][g]);
        if (t != rep(s)) {
          union_states(t, s);
          changed = true;
        }
      }
    }
    while (!merges.empty()) {
      auto [a, b] = merges.front();
      merges.pop_front();
      for (std::size_t g = 0; g < n; ++g) union_states(trans[a][g], trans[b][g]);
      changed = true;
    }
  }

  std::size_t live = 0;
  for (std::size_t s = 0; s < states.size(); ++s) {
    if (rep(s) == s) ++live;
  }
  return live;
}

TauReport tau_epimorphism(const UniversalGroup& u, const AxialAlgebra& aa) {
  if (u.n_generators() != aa.axes.size()) {
    throw Error(Errc::bad_parameter, "generator/axis count mismatch");
  }
  std::vector<Matrix> taus;
  for (std::size_t i = 0; i < aa.axes.size(); ++i) taus.push_back(miyamoto_matrix(aa, i));
  const std::size_t dim = aa.algebra.dim();

  auto matrix_of = [&](std::size_t element) {
    Matrix m = Matrix::identity(dim);
    // Right action: the word g1..gk acts as M_{gk}···M_{g1} on columns.
    for (std::size_t g : u.word_of(element)) m = taus[g] * m;
    return m;
  };

  TauReport report;
  std::map<Matrix, std::size_t> image_count;
  for (std::size_t e = 0; e < u.order(); ++e) {
    Matrix m = matrix_of(e);
    image_count[m]++;
    if (m.is_identity()) report.kernel.push_back(e);
  }
  report.miyamoto_order = image_count.size();

  // Center of U from the coset table.
  std::vector<std::size_t> z;
  for (std::size_t e = 0; e < u.order(); ++e) {
    bool central = true;
    for (std::size_t g = 0; g < u.n_generators(); ++g) {
      std::size_t t = u.generator_element(g);
      if (u.mul(e, t) != u.mul(t, e)) {
        central = false;
        break;
      }
    }
    if (central) z.push_back(e);
  }
  report.center_order = z.size();

  report.central = std::includes(z.begin(), z.end(), report.kernel.begin(), report.kernel.end());
  if (!report.central) throw Error(Errc::internal, "kernel is not central");
  if (unique_type_check(aa)) {
    report.kernel_equals_center = (z == report.kernel);
    if (!report.kernel_equals_center) {
      throw Error(Errc::internal, "unique type but kernel differs from center");
    }
  }
  return report;
}

EnumeratedGroup regular_action_group(const UniversalGroup& u) {
  std::vector<GroupElement> gens;
  std::vector<std::string> labels;
  for (std::size_t g = 0; g < u.n_generators(); ++g) {
    gens.push_back(u.generator_permutation(g));
    labels.push_back(u.generator_labels()[g]);
  }
  EnumeratedGroup out = enumerate(GroupKind::permutation, labels, gens, u.order() + 1);
  if (out.order() != u.order()) {
    throw Error(Errc::internal, "regular action is not faithful");
  }
  return out;
}

UttgReport universal_ttg_check(const FischerSpace& fs, std::size_t cap) {
  for (std::size_t x = 0; x < fs.n_points(); ++x) {
    if (fs.is_isolated(x)) throw Error(Errc::has_isolated_points, "drop isolated points first");
  }
  MatsuoAlgebra ma = matsuo(fs, Rational(1, 2));
  Presentation p = build_presentation(ma.axial);
  UniversalGroup u = todd_coxeter(p, cap);

  UttgReport report;
  report.u_order = u.order();

  EnumeratedGroup reg = regular_action_group(u);
  std::vector<std::size_t> d;
  for (std::size_t g = 0; g < u.n_generators(); ++g) {
    auto idx = reg.index_of(u.generator_permutation(g));
    if (!idx) throw Error(Errc::internal, "generator missing from regular action");
    d.push_back(*idx);
  }
  std::sort(d.begin(), d.end());
  d.erase(std::unique(d.begin(), d.end()), d.end());
  report.is_ttg = is_3transposition(reg, d).ok && d.size() == fs.n_points();

  // Canonical map x ↦ t_x against the transposition geometry of U.
  bool iso = true;
  std::vector<std::size_t> t(fs.n_points());
  for (std::size_t x = 0; x < fs.n_points(); ++x) t[x] = u.generator_element(x);
  for (std::size_t x = 0; x < fs.n_points() && iso; ++x) {
    for (std::size_t y = 0; y < fs.n_points() && iso; ++y) {
      if (x == y) continue;
      if (t[x] == t[y]) {
        iso = false;
        break;
      }
      std::size_t product = u.mul(t[x], t[y]);
      std::size_t ord = 1;
      std::size_t walk = product;
      while (walk != 0) {
        walk = u.mul(walk, product);
        ++ord;
        if (ord > 4) break;
      }
      if (fs.collinear(x, y)) {
        if (ord != 3 || u.conj(t[x], t[y]) != t[fs.wedge(x, y)]) iso = false;
      } else {
        if (ord > 2) iso = false;
      }
    }
  }
  report.geometry_iso = iso;
  return report;
}

ThetaReport theta_epimorphism(const UniversalGroup& u, const FischerSpace& fs,
                              const ThreeTranspositionGroup& target,
                              const std::vector<std::size_t>& phi) {
  if (phi.size() != fs.n_points() || u.n_generators() != fs.n_points()) {
    throw Error(Errc::phi_not_isomorphism, "phi must map every point");
  }
  std::vector<bool> in_d(target.group.order(), false);
  for (std::size_t i : target.d_class) in_d[i] = true;
  std::vector<bool> hit(target.group.order(), false);
  for (std::size_t x = 0; x < phi.size(); ++x) {
    if (phi[x] >= target.group.order() || !in_d[phi[x]] || hit[phi[x]]) {
      throw Error(Errc::phi_not_isomorphism, "phi is not injective into the class");
    }
    hit[phi[x]] = true;
  }
  if (phi.size() != target.d_class.size()) {
    throw Error(Errc::phi_not_isomorphism, "phi is not onto the class");
  }
  for (std::size_t x = 0; x < phi.size(); ++x) {
    for (std::size_t y = 0; y < phi.size(); ++y) {
      if (x == y) continue;
      std::size_t ord =
          element_order(element_mul(target.group.elements[phi[x]], target.group.elements[phi[y]]));
      if (fs.collinear(x, y)) {
        if (ord != 3 || target.group.conj(phi[x], phi[y]) != phi[fs.wedge(x, y)]) {
          throw Error(Errc::phi_not_isomorphism, "phi does not preserve lines");
        }
      } else if (ord > 2) {
        throw Error(Errc::phi_not_isomorphism, "phi maps a non-collinear pair to order 3");
      }
    }
  }

  ThetaReport report;
  report.is_epi = true;
  // Well-defined: every relator evaluates to the identity in the target.
  Presentation p = build_presentation(matsuo(fs, Rational(1, 2)).axial);
  for (const auto& relator : p.relators) {
    std::size_t e = 0;  // identity index in an enumerated group
    for (std::size_t g : relator) e = target.group.mul(e, phi[g]);
    if (!element_is_identity(target.group.elements[e])) {
      report.is_epi = false;
      break;
    }
  }
  if (report.is_epi) {
    // Surjective: the image of the points generates the target.
    std::vector<GroupElement> gens;
    std::vector<std::string> labels;
    for (std::size_t x = 0; x < phi.size(); ++x) {
      gens.push_back(target.group.elements[phi[x]]);
      labels.push_back("phi" + std::to_string(x));
    }
    report.is_epi = enumerate(target.group.kind, labels, gens, target.group.order() + 1).order() ==
                    target.group.order();
  }

  std::vector<std::size_t> zu;
  for (std::size_t e = 0; e < u.order(); ++e) {
    bool central = true;
    for (std::size_t g = 0; g < u.n_generators(); ++g) {
      std::size_t t = u.generator_element(g);
      if (u.mul(e, t) != u.mul(t, e)) {
        central = false;
        break;
      }
    }
    if (central) zu.push_back(e);
  }
  report.u_mod_center = u.order() / zu.size();
  report.target_mod_center = target.group.order() / center(target.group).size();
  report.quotient_orders_match = (report.u_mod_center == report.target_mod_center);
  return report;
}

}  // namespace axial
