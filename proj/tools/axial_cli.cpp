#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "axial/error.hpp"
#include "axial/json_io.hpp"

using namespace axial;

namespace {

std::string read_stream(std::istream& in) {
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Json read_json_source(const std::string& source) {
  std::string text;
  if (source.empty() || source == "-") {
    text = read_stream(std::cin);
  } else {
    std::ifstream file(source);
    if (!file) throw Error(Errc::parse_error, "cannot open '" + source + "'");
    text = read_stream(file);
  }
  Json parsed = Json::parse(text, nullptr, false);
  if (parsed.is_discarded()) throw Error(Errc::parse_error, "invalid JSON in '" + source + "'");
  return parsed;
}

bool is_catalog_name(const std::string& s) {
  return s == "dual_affine_2" || s == "affine_3" || s == "single_line" ||
         s == "sym_transpositions";
}

PointLineGeometry resolve_geometry(const std::string& source, std::optional<int> n) {
  if (is_catalog_name(source)) return catalog(source, n).geometry();
  return geometry_from_json(read_json_source(source));
}

void flatten(const Json& j, const std::string& prefix, std::ostream& out) {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      flatten(value, prefix.empty() ? key : prefix + "." + key, out);
    }
  } else if (j.is_array() && !j.empty() && (j.front().is_object() || j.front().is_array())) {
    for (std::size_t i = 0; i < j.size(); ++i) {
      flatten(j[i], prefix + "[" + std::to_string(i) + "]", out);
    }
  } else {
    out << prefix << " = " << j.dump() << "\n";
  }
}

struct Output {
  std::string path;
  std::string format = "json";

  void emit(const Json& report) const {
    std::ostringstream text;
    if (format == "text") {
      flatten(report, "", text);
    } else {
      text << report.dump(2) << "\n";
    }
    if (path.empty()) {
      std::cout << text.str();
    } else {
      std::ofstream file(path);
      if (!file) throw Error(Errc::parse_error, "cannot write '" + path + "'");
      file << text.str();
    }
  }
};

Json witness_json(const GeometryWitness& w, const PointLineGeometry& g) {
  Json out;
  out["reason"] = w.reason;
  auto labels = [&](const std::vector<std::size_t>& line) {
    Json l = Json::array();
    for (std::size_t p : line) l.push_back(g.points[p]);
    return l;
  };
  if (!w.line_a.empty()) out["line_a"] = labels(w.line_a);
  if (!w.line_b.empty()) out["line_b"] = labels(w.line_b);
  return out;
}

Json axis_witness_json(const AxisWitness& w) {
  Json out;
  out["reason"] = w.reason;
  out["phi"] = rational_to_json(w.phi);
  out["psi"] = rational_to_json(w.psi);
  out["u"] = vec_to_json(w.u);
  out["v"] = vec_to_json(w.v);
  out["product"] = vec_to_json(w.product);
  return out;
}

struct UniversalSummary {
  Json report;
  UniversalGroup group;
};

UniversalSummary universal_summary(const PointLineGeometry& g, const Rational& alpha,
                                   std::size_t cap) {
  FischerSpace fs(g);
  MatsuoAlgebra ma = matsuo(fs, alpha);
  Presentation p = build_presentation(ma.axial);
  UniversalGroup u = todd_coxeter(p, cap);
  TauReport tau = tau_epimorphism(u, ma.axial);

  // Is {t_x} a single conjugacy class of U?
  std::set<std::size_t> orbit;
  if (u.n_generators() > 0) {
    std::size_t t0 = u.generator_element(0);
    std::deque<std::size_t> queue{t0};
    orbit.insert(t0);
    while (!queue.empty()) {
      std::size_t x = queue.front();
      queue.pop_front();
      for (std::size_t e = 0; e < u.order(); ++e) {
        std::size_t y = u.conj(x, e);
        if (orbit.insert(y).second) queue.push_back(y);
      }
    }
  }
  std::set<std::size_t> t_class;
  for (std::size_t gidx = 0; gidx < u.n_generators(); ++gidx) {
    t_class.insert(u.generator_element(gidx));
  }

  Json report;
  report["u_order"] = u.order();
  report["miy_order"] = tau.miyamoto_order;
  report["kernel_order"] = tau.kernel.size();
  report["center_order"] = tau.center_order;
  report["t_class_single"] = (orbit == t_class);
  return UniversalSummary{std::move(report), std::move(u)};
}

int run(int argc, char** argv) {
  CLI::App app{"Exact computations with Matsuo algebras over Fischer spaces"};
  app.require_subcommand(1);

  std::string source;
  std::string alpha_text = "1/2";
  std::size_t cap = 100000;
  std::optional<int> catalog_n;
  Output output;

  auto add_common = [&](CLI::App* cmd, bool with_alpha) {
    cmd->add_option("input", source, "geometry: catalog name, JSON file, or '-' for stdin");
    cmd->add_option("--n", catalog_n, "parameter for sym_transpositions");
    if (with_alpha) cmd->add_option("--alpha", alpha_text, "rational alpha, not 0 or 1");
    cmd->add_option("--cap", cap, "enumeration cap");
    cmd->add_option("--out", output.path, "write the report to a file");
    cmd->add_option("--format", output.format, "json or text")
        ->check(CLI::IsMember({"json", "text"}));
  };

  auto* cmd_catalog = app.add_subcommand("catalog", "emit a built-in Fischer space");
  add_common(cmd_catalog, false);

  auto* cmd_verify = app.add_subcommand("verify-fischer", "validate a Fischer space");
  add_common(cmd_verify, false);

  auto* cmd_matsuo = app.add_subcommand("matsuo", "emit the Matsuo algebra of a space");
  add_common(cmd_matsuo, true);

  auto* cmd_fusion = app.add_subcommand("fusion-check", "verify all points are axes");
  add_common(cmd_fusion, true);

  auto* cmd_frobenius = app.add_subcommand("frobenius", "check the standard pairing");
  add_common(cmd_frobenius, true);

  auto* cmd_miy = app.add_subcommand("miy-group", "enumerate the Miyamoto group");
  add_common(cmd_miy, true);

  auto* cmd_universal = app.add_subcommand("universal", "coset-enumerate the presented group");
  std::string table_path;
  std::string presentation_path;
  add_common(cmd_universal, true);
  cmd_universal->add_option("--table", table_path, "dump the coset table as CSV");
  cmd_universal->add_option("--presentation", presentation_path,
                            "dump the presentation as JSON");

  auto* cmd_ttg = app.add_subcommand("ttg-check", "3-transposition checks for the presented group");
  add_common(cmd_ttg, false);

  std::string geometry_flag;
  std::string payload_source;

  auto* cmd_rep2mod = app.add_subcommand("rep-to-module", "module from a representation");
  cmd_rep2mod->add_option("input", payload_source, "representation JSON file or '-'");
  cmd_rep2mod->add_option("--geometry", geometry_flag, "geometry: catalog name or JSON file")
      ->required();
  cmd_rep2mod->add_option("--n", catalog_n, "parameter for sym_transpositions");
  cmd_rep2mod->add_option("--alpha", alpha_text, "rational alpha");
  cmd_rep2mod->add_option("--out", output.path, "write the report to a file");
  cmd_rep2mod->add_option("--format", output.format, "json or text");

  auto* cmd_mod2rep = app.add_subcommand("module-to-rep", "representation from a module");
  cmd_mod2rep->add_option("input", payload_source, "module JSON file or '-'");
  cmd_mod2rep->add_option("--geometry", geometry_flag, "geometry: catalog name or JSON file")
      ->required();
  cmd_mod2rep->add_option("--n", catalog_n, "parameter for sym_transpositions");
  cmd_mod2rep->add_option("--alpha", alpha_text, "rational alpha");
  cmd_mod2rep->add_option("--cap", cap, "enumeration cap");
  cmd_mod2rep->add_option("--out", output.path, "write the report to a file");
  cmd_mod2rep->add_option("--format", output.format, "json or text");

  auto* cmd_regular = app.add_subcommand("find-regular", "regular submodule from 1-eigenvectors");
  std::string axis_label;
  std::string module_path;
  bool sweep_only = false;
  add_common(cmd_regular, true);
  cmd_regular->add_option("--module", module_path, "module JSON (default: regular module)");
  cmd_regular->add_option("--axis", axis_label, "point label (default: first point)");
  cmd_regular->add_flag("--sweep", sweep_only, "only report which eigenbasis seeds average to 0");

  auto* cmd_maschke = app.add_subcommand("maschke", "orthogonal complement of a submodule");
  std::string submodule_path;
  std::string form_path;
  add_common(cmd_maschke, true);
  cmd_maschke->add_option("--module", module_path, "module JSON (default: regular module)");
  cmd_maschke->add_option("--submodule", submodule_path, "JSON array of spanning vectors")
      ->required();
  cmd_maschke->add_option("--form", form_path, "gram matrix JSON (default: standard pairing)");

  auto* cmd_components = app.add_subcommand("components", "split along connected components");
  add_common(cmd_components, true);

  CLI11_PARSE(app, argc, argv);

  const Rational alpha = parse_rational(alpha_text);

  if (cmd_catalog->parsed()) {
    if (!is_catalog_name(source)) throw Error(Errc::unknown_name, "unknown catalog '" + source + "'");
    output.emit(geometry_to_json(catalog(source, catalog_n).geometry()));
    return 0;
  }

  if (cmd_verify->parsed()) {
    PointLineGeometry g = resolve_geometry(source, catalog_n);
    auto pts = validate_partial_triple_system(g);
    if (!pts.ok) {
      output.emit(Json{{"ok", false}, {"witness", witness_json(*pts.witness, g)}});
      return 1;
    }
    auto fischer = is_fischer_space(g);
    if (!fischer.ok) {
      output.emit(Json{{"ok", false}, {"witness", witness_json(*fischer.witness, g)}});
      return 1;
    }
    output.emit(Json{{"ok", true}, {"points", g.n_points()}, {"lines", g.lines.size()}});
    return 0;
  }

  if (cmd_matsuo->parsed()) {
    FischerSpace fs(resolve_geometry(source, catalog_n));
    output.emit(axial_algebra_to_json(matsuo(fs, alpha).axial));
    return 0;
  }

  if (cmd_fusion->parsed()) {
    // Accepts any partial triple system; the points are axes exactly when
    // the space is a Fischer space, so a violation is the interesting output.
    PointLineGeometry g = resolve_geometry(source, catalog_n);
    AxialAlgebra aa = matsuo_of_triple_system(g, alpha);
    AxialReport report = check_axial(aa);
    if (!report.ok) {
      Json witness;
      if (report.failing_axis) {
        witness["axis"] = g.points[*report.failing_axis];
      }
      if (report.witness) witness["violation"] = axis_witness_json(*report.witness);
      output.emit(Json{{"ok", false}, {"witness", witness}});
      return 1;
    }
    output.emit(Json{{"ok", true}, {"dim", aa.algebra.dim()}});
    return 0;
  }

  if (cmd_frobenius->parsed()) {
    FischerSpace fs(resolve_geometry(source, catalog_n));
    MatsuoAlgebra ma = matsuo(fs, alpha);
    Matrix gram = frobenius_gram(fs, alpha);
    FrobeniusReport report = frobenius_check(ma.axial, gram);
    Json out;
    out["associative"] = report.associative;
    out["eigen_orthogonal"] = report.eigen_orthogonal;
    out["nondegenerate"] = report.nondegenerate;
    out["det"] = rational_to_json(report.gram_det);
    out["gram"] = matrix_to_json(gram);
    output.emit(out);
    return 0;
  }

  if (cmd_miy->parsed()) {
    FischerSpace fs(resolve_geometry(source, catalog_n));
    MatsuoAlgebra ma = matsuo(fs, alpha);
    MiyamotoGroup miy = miyamoto_group(ma.axial, cap);
    Json out;
    out["order"] = miy.matrices.order();
    if (miy.point_action) {
      out["point_action"] = group_to_json(*miy.point_action, fs.geometry().points);
    }
    // Conjugacy class sizes.
    {
      std::vector<bool> seen(miy.matrices.order(), false);
      std::vector<std::size_t> sizes;
      for (std::size_t e = 0; e < miy.matrices.order(); ++e) {
        if (seen[e]) continue;
        std::size_t size = 0;
        for (std::size_t by = 0; by < miy.matrices.order(); ++by) {
          std::size_t image = miy.matrices.conj(e, by);
          if (!seen[image]) {
            seen[image] = true;
            ++size;
          }
        }
        sizes.push_back(size);
      }
      std::sort(sizes.begin(), sizes.end());
      out["class_sizes"] = sizes;
    }
    Json words = Json::array();
    for (std::size_t e = 0; e < miy.matrices.order(); ++e) {
      Json word = Json::array();
      for (std::size_t g : miy.matrices.words[e]) word.push_back(miy.matrices.gen_labels[g]);
      words.push_back(std::move(word));
    }
    out["witness_words"] = std::move(words);
    output.emit(out);
    return 0;
  }

  if (cmd_universal->parsed()) {
    PointLineGeometry g = resolve_geometry(source, catalog_n);
    if (!presentation_path.empty()) {
      FischerSpace fs(g);
      Presentation p = build_presentation(matsuo(fs, alpha).axial);
      std::ofstream file(presentation_path);
      if (!file) throw Error(Errc::parse_error, "cannot write '" + presentation_path + "'");
      file << presentation_to_json(p).dump(2) << "\n";
    }
    UniversalSummary summary = universal_summary(g, alpha, cap);
    if (!table_path.empty()) {
      std::ofstream csv(table_path);
      if (!csv) throw Error(Errc::parse_error, "cannot write '" + table_path + "'");
      csv << "element";
      for (const auto& label : summary.group.generator_labels()) csv << "," << label;
      csv << "\n";
      for (std::size_t c = 0; c < summary.group.order(); ++c) {
        csv << c;
        for (std::size_t gi = 0; gi < summary.group.n_generators(); ++gi) {
          csv << "," << summary.group.step(c, gi);
        }
        csv << "\n";
      }
    }
    output.emit(summary.report);
    return 0;
  }

  if (cmd_ttg->parsed()) {
    FischerSpace fs(resolve_geometry(source, catalog_n));
    UttgReport report = universal_ttg_check(fs, cap);
    Json out;
    out["is_ttg"] = report.is_ttg;
    out["geometry_iso"] = report.geometry_iso;
    out["u_order"] = report.u_order;
    output.emit(out);
    return report.is_ttg && report.geometry_iso ? 0 : 1;
  }

  if (cmd_rep2mod->parsed()) {
    FischerSpace fs(resolve_geometry(geometry_flag, catalog_n));
    MatsuoAlgebra ma = matsuo(fs, alpha);
    GroupRepresentation rho =
        representation_from_json(read_json_source(payload_source), fs.geometry().points);
    AlgebraModule mod = rep_to_module(rho, alpha, ma);
    Json out;
    out["module"] = module_to_json(mod, fs.geometry().points);
    out["check"] = true;
    output.emit(out);
    return 0;
  }

  if (cmd_mod2rep->parsed()) {
    FischerSpace fs(resolve_geometry(geometry_flag, catalog_n));
    MatsuoAlgebra ma = matsuo(fs, alpha);
    AlgebraModule mod = module_from_json(read_json_source(payload_source), fs.geometry().points);
    ModuleReport check = check_module(mod, ma.axial);
    if (!check.ok) {
      output.emit(Json{{"ok", false}, {"witness", check.witness}});
      return 1;
    }
    UniversalGroup u = todd_coxeter(build_presentation(ma.axial), cap);
    GroupRepresentation rho = module_to_rep(mod, ma.axial, u);
    rho.labels = fs.geometry().points;  // wire format keys images by point
    Json out = representation_to_json(rho);
    out["u_order"] = u.order();
    Json dims = Json::object();
    for (std::size_t x = 0; x < fs.n_points(); ++x) {
      Json d = Json::array();
      for (std::size_t i = 0; i < ma.axial.rule.size(); ++i) {
        d.push_back(
            module_eigenspace(mod, ma.axial.axes[x], ma.axial.rule.eigenvalue(i)).dim());
      }
      dims[fs.geometry().points[x]] = std::move(d);
    }
    out["eigenspace_dims"] = std::move(dims);
    output.emit(out);
    return 0;
  }

  if (cmd_regular->parsed()) {
    FischerSpace fs(resolve_geometry(source, catalog_n));
    MatsuoAlgebra ma = matsuo(fs, alpha);
    AlgebraModule mod = module_path.empty()
                            ? regular_module(ma.axial)
                            : module_from_json(read_json_source(module_path),
                                               fs.geometry().points);
    std::size_t x = axis_label.empty() ? 0 : fs.geometry().index_of(axis_label);
    UniversalGroup u = todd_coxeter(build_presentation(ma.axial), cap);

    Json out;
    std::vector<std::size_t> sweep = seed_sweep(mod, ma, u, x);
    out["sweep_nonzero"] = sweep;
    Vec axis(ma.axial.algebra.dim());
    axis[x] = 1;
    Subspace one = module_eigenspace(mod, axis, Rational(1));
    out["one_eigenspace_dim"] = one.dim();
    if (!sweep_only) {
      if (one.dim() == 0) {
        output.emit(Json{{"ok", false}, {"witness", "trivial 1-eigenspace at the chosen axis"}});
        return 1;
      }
      Vec seed = one.basis_vectors()[sweep.empty() ? 0 : sweep.front()];
      AveragedFamily family = averaged_family(mod, ma, u, x, seed);
      RegularMapReport report = regular_map(mod, ma, family);
      out["u_x_order"] = family.u_x_order;
      out["is_hom"] = report.is_hom;
      out["injective"] = report.injective;
      out["rank"] = report.rank;
      out["hom"] = matrix_to_json(report.hom);
    }
    output.emit(out);
    return 0;
  }

  if (cmd_maschke->parsed()) {
    FischerSpace fs(resolve_geometry(source, catalog_n));
    MatsuoAlgebra ma = matsuo(fs, alpha);
    AlgebraModule mod = module_path.empty()
                            ? regular_module(ma.axial)
                            : module_from_json(read_json_source(module_path),
                                               fs.geometry().points);
    Json sub = read_json_source(submodule_path);
    std::vector<Vec> gens;
    for (const auto& row : sub) gens.push_back(vec_from_json(row));
    Subspace n = Subspace::span(mod.dim, gens);
    ModuleForm form;
    form.gram = form_path.empty() ? frobenius_gram(fs, alpha)
                                  : matrix_from_json(read_json_source(form_path));
    try {
      Subspace complement = maschke_complement(mod, form, n, ma.axial);
      Json out;
      out["complement"] = matrix_to_json(complement.basis());
      out["dim"] = complement.dim();
      output.emit(out);
      return 0;
    } catch (const Error& e) {
      if (e.code() == Errc::degenerate_on_n || e.code() == Errc::not_a_submodule) {
        output.emit(Json{{"ok", false},
                         {"witness", Json{{"kind", errc_name(e.code())}, {"message", e.what()}}}});
        return 1;
      }
      throw;
    }
  }

  if (cmd_components->parsed()) {
    FischerSpace fs(resolve_geometry(source, catalog_n));
    MatsuoAlgebra ma = matsuo(fs, alpha);
    std::vector<MatsuoAlgebra> blocks = component_decompose(ma);
    Json out;
    Json comps = Json::array();
    Json dims = Json::array();
    for (const auto& block : blocks) {
      comps.push_back(geometry_to_json(block.space.geometry()));
      dims.push_back(block.axial.algebra.dim());
    }
    out["components"] = std::move(comps);
    out["block_dims"] = std::move(dims);
    output.emit(out);
    return 0;
  }

  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const Error& e) {
    Json diagnostic{{"error", {{"kind", errc_name(e.code())}, {"message", e.what()}}}};
    std::cerr << diagnostic.dump(2) << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << Json{{"error", {{"kind", "Unexpected"}, {"message", e.what()}}}}.dump(2) << "\n";
    return 2;
  }
}
