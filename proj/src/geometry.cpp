#include "axial/geometry.hpp"

#include <algorithm>
#include <map>
#include <queue>

#include "axial/error.hpp"
#include "axial/group.hpp"

namespace axial {

namespace {
constexpr std::size_t npos = static_cast<std::size_t>(-1);
}

PointLineGeometry PointLineGeometry::from_labels(
    std::vector<std::string> point_labels,
    const std::vector<std::vector<std::string>>& line_labels) {
  PointLineGeometry g;
  g.points = std::move(point_labels);
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < g.points.size(); ++i) {
    if (!index.emplace(g.points[i], i).second) {
      throw Error(Errc::bad_parameter, "duplicate point label '" + g.points[i] + "'");
    }
  }
  std::set<std::vector<std::size_t>> seen;
  for (const auto& line : line_labels) {
    std::vector<std::size_t> l;
    for (const auto& label : line) {
      auto it = index.find(label);
      if (it == index.end()) throw Error(Errc::unknown_point, "line uses '" + label + "'");
      l.push_back(it->second);
    }
    std::sort(l.begin(), l.end());
    l.erase(std::unique(l.begin(), l.end()), l.end());
    if (seen.insert(l).second) g.lines.push_back(std::move(l));
  }
  return g;
}

std::size_t PointLineGeometry::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i] == label) return i;
  }
  throw Error(Errc::unknown_point, "no point '" + label + "'");
}

bool PointLineGeometry::has_line(const std::vector<std::size_t>& sorted_line) const {
  return std::find(lines.begin(), lines.end(), sorted_line) != lines.end();
}

ValidationReport validate_partial_triple_system(const PointLineGeometry& g) {
  ValidationReport report;
  for (const auto& line : g.lines) {
    if (line.size() != 3) {
      report.witness = GeometryWitness{"line does not have exactly 3 points", line, {}};
      return report;
    }
    for (std::size_t p : line) {
      if (p >= g.n_points()) {
        report.witness = GeometryWitness{"line uses unknown point index", line, {}};
        return report;
      }
    }
  }
  for (std::size_t a = 0; a < g.lines.size(); ++a) {
    for (std::size_t b = a + 1; b < g.lines.size(); ++b) {
      std::vector<std::size_t> common;
      std::set_intersection(g.lines[a].begin(), g.lines[a].end(), g.lines[b].begin(),
                            g.lines[b].end(), std::back_inserter(common));
      if (common.size() >= 2) {
        report.witness =
            GeometryWitness{"two distinct lines share two points", g.lines[a], g.lines[b]};
        return report;
      }
    }
  }
  report.ok = true;
  return report;
}

PointLineGeometry generated_subspace(const PointLineGeometry& g,
                                     const std::set<std::size_t>& seed_points,
                                     const std::set<std::size_t>& seed_lines) {
  for (std::size_t p : seed_points) {
    if (p >= g.n_points()) throw Error(Errc::unknown_point, "seed point out of range");
  }
  for (std::size_t l : seed_lines) {
    if (l >= g.lines.size()) throw Error(Errc::unknown_line, "seed line out of range");
  }
  std::vector<bool> in_points(g.n_points(), false);
  std::vector<bool> in_lines(g.lines.size(), false);
  for (std::size_t p : seed_points) in_points[p] = true;
  for (std::size_t l : seed_lines) {
    in_lines[l] = true;
    for (std::size_t p : g.lines[l]) in_points[p] = true;
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t l = 0; l < g.lines.size(); ++l) {
      if (in_lines[l]) continue;
      std::size_t inside = 0;
      for (std::size_t p : g.lines[l]) {
        if (in_points[p]) ++inside;
      }
      if (inside >= 2) {
        in_lines[l] = true;
        for (std::size_t p : g.lines[l]) in_points[p] = true;
        changed = true;
      }
    }
  }
  PointLineGeometry out;
  std::vector<std::size_t> remap(g.n_points(), npos);
  for (std::size_t p = 0; p < g.n_points(); ++p) {
    if (in_points[p]) {
      remap[p] = out.points.size();
      out.points.push_back(g.points[p]);
    }
  }
  for (std::size_t l = 0; l < g.lines.size(); ++l) {
    if (!in_lines[l]) continue;
    std::vector<std::size_t> line;
    for (std::size_t p : g.lines[l]) line.push_back(remap[p]);
    std::sort(line.begin(), line.end());
    out.lines.push_back(std::move(line));
  }
  return out;
}

bool geometries_isomorphic(const PointLineGeometry& a, const PointLineGeometry& b) {
  if (a.n_points() != b.n_points() || a.lines.size() != b.lines.size()) return false;
  const std::size_t n = a.n_points();

  auto degrees = [](const PointLineGeometry& g) {
    std::vector<std::size_t> d(g.n_points(), 0);
    for (const auto& line : g.lines) {
      for (std::size_t p : line) d[p]++;
    }
    return d;
  };
  std::vector<std::size_t> deg_a = degrees(a);
  std::vector<std::size_t> deg_b = degrees(b);
  {
    auto sa = deg_a;
    auto sb = deg_b;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
  }

  std::set<std::vector<std::size_t>> b_lines(b.lines.begin(), b.lines.end());
  std::vector<std::size_t> image(n, npos);
  std::vector<bool> used(n, false);

  // Points of a are mapped in index order; every line of a whose points are
  // all mapped must land on a line of b.
  auto consistent = [&](std::size_t depth) {
    for (const auto& line : a.lines) {
      bool full = true;
      for (std::size_t p : line) {
        if (p > depth || image[p] == npos) {
          full = false;
          break;
        }
      }
      if (!full) continue;
      std::vector<std::size_t> mapped;
      for (std::size_t p : line) mapped.push_back(image[p]);
      std::sort(mapped.begin(), mapped.end());
      if (!b_lines.count(mapped)) return false;
    }
    return true;
  };

  auto rec = [&](auto&& self, std::size_t depth) -> bool {
    if (depth == n) {
      std::set<std::vector<std::size_t>> mapped;
      for (const auto& line : a.lines) {
        std::vector<std::size_t> m;
        for (std::size_t p : line) m.push_back(image[p]);
        std::sort(m.begin(), m.end());
        mapped.insert(std::move(m));
      }
      return mapped == b_lines;
    }
    for (std::size_t cand = 0; cand < n; ++cand) {
      if (used[cand] || deg_b[cand] != deg_a[depth]) continue;
      image[depth] = cand;
      used[cand] = true;
      if (consistent(depth) && self(self, depth + 1)) return true;
      image[depth] = npos;
      used[cand] = false;
    }
    return false;
  };
  return rec(rec, 0);
}

ValidationReport is_fischer_space(const PointLineGeometry& g) {
  auto pts = validate_partial_triple_system(g);
  if (!pts.ok) {
    throw Error(Errc::not_partial_triple_system,
                pts.witness ? pts.witness->reason : "invalid partial triple system");
  }
  const PointLineGeometry dual2 = dual_affine_plane_2();
  const PointLineGeometry aff3 = affine_plane_3();
  ValidationReport report;
  for (std::size_t a = 0; a < g.lines.size(); ++a) {
    for (std::size_t b = a + 1; b < g.lines.size(); ++b) {
      std::vector<std::size_t> common;
      std::set_intersection(g.lines[a].begin(), g.lines[a].end(), g.lines[b].begin(),
                            g.lines[b].end(), std::back_inserter(common));
      if (common.empty()) continue;
      PointLineGeometry sub = generated_subspace(g, {}, {a, b});
      bool good = (sub.n_points() == 6 && geometries_isomorphic(sub, dual2)) ||
                  (sub.n_points() == 9 && geometries_isomorphic(sub, aff3));
      if (!good) {
        report.witness = GeometryWitness{"intersecting line pair generates neither plane",
                                         g.lines[a], g.lines[b]};
        return report;
      }
    }
  }
  report.ok = true;
  return report;
}

Components connected_components(const PointLineGeometry& g) {
  const std::size_t n = g.n_points();
  std::vector<std::vector<std::size_t>> adj(n);
  for (const auto& line : g.lines) {
    for (std::size_t i = 0; i < line.size(); ++i) {
      for (std::size_t j = 0; j < line.size(); ++j) {
        if (i != j) adj[line[i]].push_back(line[j]);
      }
    }
  }
  Components out;
  std::vector<bool> visited(n, false);
  for (std::size_t start = 0; start < n; ++start) {
    if (visited[start]) continue;
    if (adj[start].empty()) {
      visited[start] = true;
      out.isolated.push_back(start);
      continue;
    }
    std::vector<bool> members(n, false);
    std::queue<std::size_t> bfs;
    bfs.push(start);
    visited[start] = true;
    members[start] = true;
    while (!bfs.empty()) {
      std::size_t p = bfs.front();
      bfs.pop();
      for (std::size_t q : adj[p]) {
        if (!visited[q]) {
          visited[q] = true;
          members[q] = true;
          bfs.push(q);
        }
      }
    }
    PointLineGeometry comp;
    std::vector<std::size_t> remap(n, npos);
    for (std::size_t p = 0; p < n; ++p) {
      if (members[p]) {
        remap[p] = comp.points.size();
        comp.points.push_back(g.points[p]);
      }
    }
    for (const auto& line : g.lines) {
      if (members[line.front()]) {
        std::vector<std::size_t> l;
        for (std::size_t p : line) l.push_back(remap[p]);
        std::sort(l.begin(), l.end());
        comp.lines.push_back(std::move(l));
      }
    }
    out.components.push_back(std::move(comp));
  }
  return out;
}

PointLineGeometry without_isolated(const PointLineGeometry& g) {
  std::vector<bool> on_line(g.n_points(), false);
  for (const auto& line : g.lines) {
    if (line.size() >= 2) {
      for (std::size_t p : line) on_line[p] = true;
    }
  }
  PointLineGeometry out;
  std::vector<std::size_t> remap(g.n_points(), npos);
  for (std::size_t p = 0; p < g.n_points(); ++p) {
    if (on_line[p]) {
      remap[p] = out.points.size();
      out.points.push_back(g.points[p]);
    }
  }
  for (const auto& line : g.lines) {
    std::vector<std::size_t> l;
    for (std::size_t p : line) l.push_back(remap[p]);
    std::sort(l.begin(), l.end());
    out.lines.push_back(std::move(l));
  }
  return out;
}

bool is_connected(const PointLineGeometry& g) {
  Components c = connected_components(g);
  return c.components.size() + c.isolated.size() <= 1;
}

FischerSpace::FischerSpace(PointLineGeometry g) : g_(std::move(g)) {
  auto report = is_fischer_space(g_);
  if (!report.ok) {
    throw Error(Errc::bad_parameter,
                "not a Fischer space: " + (report.witness ? report.witness->reason : ""));
  }
  const std::size_t n = g_.n_points();
  wedge_.assign(n * n, npos);
  line_count_.assign(n, 0);
  for (const auto& line : g_.lines) {
    for (std::size_t p : line) line_count_[p]++;
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 3; ++j) {
        if (i == j) continue;
        std::size_t k = 3 - i - j;
        wedge_[line[i] * n + line[j]] = line[k];
      }
    }
  }
}

bool FischerSpace::collinear(std::size_t x, std::size_t y) const {
  if (x >= n_points() || y >= n_points()) throw Error(Errc::unknown_point, "index out of range");
  return x != y && wedge_[x * n_points() + y] != npos;
}

std::size_t FischerSpace::wedge(std::size_t x, std::size_t y) const {
  if (x >= n_points() || y >= n_points()) throw Error(Errc::unknown_point, "index out of range");
  std::size_t w = wedge_[x * n_points() + y];
  if (w == npos) throw Error(Errc::unknown_line, "points not collinear");
  return w;
}

bool FischerSpace::is_isolated(std::size_t x) const {
  if (x >= n_points()) throw Error(Errc::unknown_point, "index out of range");
  return line_count_[x] == 0;
}

std::size_t FischerSpace::lines_through(std::size_t x) const {
  if (x >= n_points()) throw Error(Errc::unknown_point, "index out of range");
  return line_count_[x];
}

Permutation point_tau(const FischerSpace& fs, std::size_t x) {
  if (x >= fs.n_points()) throw Error(Errc::unknown_point, "index out of range");
  std::vector<std::size_t> images(fs.n_points());
  for (std::size_t y = 0; y < fs.n_points(); ++y) {
    images[y] = fs.collinear(x, y) ? fs.wedge(x, y) : y;
  }
  return Permutation(images);
}

Matrix collinearity_matrix(const FischerSpace& fs) {
  const std::size_t n = fs.n_points();
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && fs.collinear(i, j)) m.at(i, j) = 1;
    }
  }
  return m;
}

PointLineGeometry dual_affine_plane_2() {
  // Pair labels of a 4-element set; the three pairings into two disjoint
  // pairs are the non-collinear couples.
  return PointLineGeometry::from_labels(
      {"12", "13", "14", "23", "24", "34"},
      {{"12", "13", "23"}, {"12", "14", "24"}, {"13", "14", "34"}, {"23", "24", "34"}});
}

PointLineGeometry affine_plane_3() {
  std::vector<std::string> points;
  for (int x = 0; x < 3; ++x) {
    for (int y = 0; y < 3; ++y) points.push_back("p" + std::to_string(x) + std::to_string(y));
  }
  auto label = [](int x, int y) {
    return "p" + std::to_string(((x % 3) + 3) % 3) + std::to_string(((y % 3) + 3) % 3);
  };
  std::vector<std::vector<std::string>> lines;
  for (int c = 0; c < 3; ++c) {
    lines.push_back({label(0, c), label(1, c), label(2, c)});
    lines.push_back({label(c, 0), label(c, 1), label(c, 2)});
    lines.push_back({label(0, c), label(1, c + 1), label(2, c + 2)});
    lines.push_back({label(0, c), label(1, c + 2), label(2, c + 4)});
  }
  return PointLineGeometry::from_labels(points, lines);
}

FischerSpace catalog(const std::string& name, std::optional<int> n) {
  if (name == "dual_affine_2") return FischerSpace(dual_affine_plane_2());
  if (name == "affine_3") return FischerSpace(affine_plane_3());
  if (name == "single_line") {
    return FischerSpace(PointLineGeometry::from_labels({"a", "b", "c"}, {{"a", "b", "c"}}));
  }
  if (name == "sym_transpositions") {
    if (!n || *n < 3) {
      throw Error(Errc::bad_parameter, "sym_transpositions requires n >= 3");
    }
    const int m = *n;
    std::vector<std::string> points;
    auto pair_label = [](int i, int j) {
      return std::to_string(i) + "_" + std::to_string(j);
    };
    for (int i = 1; i <= m; ++i) {
      for (int j = i + 1; j <= m; ++j) points.push_back(pair_label(i, j));
    }
    std::vector<std::vector<std::string>> lines;
    for (int i = 1; i <= m; ++i) {
      for (int j = i + 1; j <= m; ++j) {
        for (int k = j + 1; k <= m; ++k) {
          lines.push_back({pair_label(i, j), pair_label(i, k), pair_label(j, k)});
        }
      }
    }
    return FischerSpace(PointLineGeometry::from_labels(points, lines));
  }
  throw Error(Errc::unknown_name, "no catalog entry '" + name + "'");
}

}  // namespace axial
