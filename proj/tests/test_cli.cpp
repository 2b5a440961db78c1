#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "axial/json_io.hpp"

namespace {

using Json = nlohmann::json;

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_shell(const std::string& command) {
  RunResult result;
  FILE* pipe = popen((command + " 2>/dev/null").c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buffer[4096];
  while (std::size_t n = fread(buffer, 1, sizeof buffer, pipe)) {
    result.out.append(buffer, n);
  }
  int status = pclose(pipe);
  result.exit_code = WEXITSTATUS(status);
  return result;
}

RunResult run_cli(const std::string& args) {
  return run_shell(std::string(AXIAL_CLI_PATH) + " " + args);
}

std::string write_temp(const std::string& name, const std::string& content) {
  std::string path = std::string("/tmp/axial_cli_") + name;
  std::ofstream file(path);
  file << content;
  return path;
}

const char* kPencil = R"({"points":["a","b","c","d","e"],
                          "lines":[["a","b","c"],["a","d","e"]]})";

}  // namespace

TEST_CASE("catalog emits geometries") {
  RunResult r = run_cli("catalog affine_3");
  CHECK(r.exit_code == 0);
  Json g = Json::parse(r.out);
  CHECK(g.at("points").size() == 9);
  CHECK(g.at("lines").size() == 12);

  CHECK(run_cli("catalog no_such_space").exit_code == 2);
  CHECK(run_cli("catalog sym_transpositions --n 4").exit_code == 0);
}

TEST_CASE("catalog output is byte-stable") {
  RunResult a = run_cli("catalog dual_affine_2");
  RunResult b = run_cli("catalog dual_affine_2");
  CHECK(a.out == b.out);
  CHECK(!a.out.empty());
}

TEST_CASE("verify-fischer accepts catalog spaces and rejects the pencil") {
  CHECK(run_cli("verify-fischer dual_affine_2").exit_code == 0);

  std::string pencil = write_temp("pencil.json", kPencil);
  RunResult r = run_cli("verify-fischer " + pencil);
  CHECK(r.exit_code == 1);
  Json report = Json::parse(r.out);
  CHECK(report.at("ok") == false);
  CHECK(report.at("witness").contains("line_a"));
  CHECK(report.at("witness").contains("line_b"));
}

TEST_CASE("fusion-check passes on the dual affine plane") {
  RunResult r = run_cli("fusion-check --alpha 1/2 dual_affine_2");
  CHECK(r.exit_code == 0);
  CHECK(Json::parse(r.out).at("ok") == true);
}

TEST_CASE("fusion-check reports a witness product on the pencil") {
  std::string pencil = write_temp("fusion_pencil.json", kPencil);
  RunResult r = run_cli("fusion-check --alpha 1/2 " + pencil);
  CHECK(r.exit_code == 1);
  Json report = Json::parse(r.out);
  CHECK(report.at("ok") == false);
  CHECK(report.at("witness").at("axis") == "a");
  CHECK(report.at("witness").at("violation").at("reason") == "fusion violated");
}

TEST_CASE("matsuo json round-trips") {
  RunResult r = run_cli("matsuo single_line --alpha 1/2");
  CHECK(r.exit_code == 0);
  Json algebra = Json::parse(r.out);
  CHECK(algebra.at("basis").size() == 3);
  // a*b has the three expected coordinates.
  CHECK(algebra.at("products")[0][1] == Json::array({"1/4", "1/4", "-1/4"}));
  CHECK(algebra.at("rule").at("plus") == Json::array({"1", "0"}));
}

TEST_CASE("universal accepts piped geometry") {
  RunResult r = run_shell(std::string(AXIAL_CLI_PATH) + " catalog affine_3 | " +
                          AXIAL_CLI_PATH + " universal --alpha 1/2");
  CHECK(r.exit_code == 0);
  Json report = Json::parse(r.out);
  CHECK(report.at("u_order") == 54);
  CHECK(report.at("miy_order") == 18);
  CHECK(report.at("kernel_order") == 3);
  CHECK(report.at("t_class_single") == true);
}

TEST_CASE("universal reports are deterministic") {
  RunResult a = run_cli("universal affine_3 --alpha 1/2");
  RunResult b = run_cli("universal affine_3 --alpha 1/2");
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("universal dumps a coset table") {
  std::string table = "/tmp/axial_cli_table.csv";
  RunResult r = run_cli("universal single_line --alpha 1/2 --table " + table);
  CHECK(r.exit_code == 0);
  std::ifstream csv(table);
  REQUIRE(csv.good());
  std::string header;
  std::getline(csv, header);
  CHECK(header == "element,t_0,t_1,t_2");
  std::size_t rows = 0;
  for (std::string line; std::getline(csv, line);) ++rows;
  CHECK(rows == 6);
}

TEST_CASE("universal dumps the presentation") {
  std::string path = "/tmp/axial_cli_presentation.json";
  RunResult r = run_cli("universal single_line --alpha 1/2 --presentation " + path);
  CHECK(r.exit_code == 0);
  std::ifstream file(path);
  REQUIRE(file.good());
  Json p = Json::parse(file);
  CHECK(p.at("generators").size() == 3);
  CHECK(p.at("relators").size() == 12);
}

TEST_CASE("module-to-rep reports eigenspace dimensions per axis") {
  std::string module_path = write_temp(
      "regular_like.json",
      R"({"dim":1,"actions":{"a":[["0"]],"b":[["0"]],"c":[["0"]]}})");
  RunResult r =
      run_cli("module-to-rep " + module_path + " --geometry single_line --alpha 1/2");
  CHECK(r.exit_code == 0);
  Json report = Json::parse(r.out);
  CHECK(report.at("eigenspace_dims").at("a") == Json::array({0, 1, 0}));
}

TEST_CASE("miy-group reports order and class sizes") {
  RunResult r = run_cli("miy-group dual_affine_2 --alpha 1/2");
  CHECK(r.exit_code == 0);
  Json report = Json::parse(r.out);
  CHECK(report.at("order") == 24);
  CHECK(report.at("point_action").at("order") == 24);
  // S4 class sizes.
  CHECK(report.at("class_sizes") == Json::array({1, 3, 6, 6, 8}));
}

TEST_CASE("ttg-check") {
  RunResult r = run_cli("ttg-check dual_affine_2");
  CHECK(r.exit_code == 0);
  Json report = Json::parse(r.out);
  CHECK(report.at("is_ttg") == true);
  CHECK(report.at("geometry_iso") == true);
}

TEST_CASE("frobenius report") {
  RunResult r = run_cli("frobenius single_line --alpha 1/2");
  CHECK(r.exit_code == 0);
  Json report = Json::parse(r.out);
  CHECK(report.at("associative") == true);
  CHECK(report.at("eigen_orthogonal") == true);
  CHECK(report.at("nondegenerate") == true);
  CHECK(report.at("det") == "27/32");

  RunResult degenerate = run_cli("frobenius single_line --alpha -1");
  Json dreport = Json::parse(degenerate.out);
  CHECK(dreport.at("nondegenerate") == false);
  CHECK(dreport.at("det") == "0");
}

TEST_CASE("rep-to-module and module-to-rep round trip") {
  std::string sign_rep = write_temp(
      "sign_rep.json",
      R"({"dim":1,"images":{"a":[["-1"]],"b":[["-1"]],"c":[["-1"]]}})");
  RunResult to_module =
      run_cli("rep-to-module " + sign_rep + " --geometry single_line --alpha 1/2");
  CHECK(to_module.exit_code == 0);
  Json module_report = Json::parse(to_module.out);
  CHECK(module_report.at("module").at("actions").at("a") == Json::array({Json::array({"1/2"})}));

  std::string module_path =
      write_temp("sign_module.json", module_report.at("module").dump());
  RunResult to_rep =
      run_cli("module-to-rep " + module_path + " --geometry single_line --alpha 1/2");
  CHECK(to_rep.exit_code == 0);
  Json rep = Json::parse(to_rep.out);
  CHECK(rep.at("images").at("b") == Json::array({Json::array({"-1"})}));
  CHECK(rep.at("u_order") == 6);
}

TEST_CASE("find-regular on the affine plane") {
  RunResult r = run_cli("find-regular affine_3 --alpha 1/2");
  CHECK(r.exit_code == 0);
  Json report = Json::parse(r.out);
  CHECK(report.at("is_hom") == true);
  CHECK(report.at("injective") == true);
  CHECK(report.at("rank") == 9);
  CHECK(report.at("u_x_order") == 2);
  CHECK(report.at("sweep_nonzero") == Json::array({0}));
}

TEST_CASE("maschke complement and the degenerate case") {
  std::string sub = write_temp("sum_line.json", R"([["1","1","1"]])");
  RunResult degenerate =
      run_cli("maschke single_line --alpha -1 --submodule " + sub);
  CHECK(degenerate.exit_code == 1);
  Json report = Json::parse(degenerate.out);
  CHECK(report.at("witness").at("kind") == "DegenerateOnN");

  // At alpha = 1/2 the sum line is not even a submodule of the regular module.
  RunResult not_sub = run_cli("maschke single_line --alpha 1/2 --submodule " + sub);
  CHECK(not_sub.exit_code == 1);
  CHECK(Json::parse(not_sub.out).at("witness").at("kind") == "NotASubmodule");

  // A disconnected space splits along its blocks.
  std::string two_lines = write_temp(
      "maschke_two_lines.json",
      R"({"points":["a","b","c","x","y","z"],"lines":[["a","b","c"],["x","y","z"]]})");
  std::string block = write_temp(
      "block.json",
      R"([["1","0","0","0","0","0"],["0","1","0","0","0","0"],["0","0","1","0","0","0"]])");
  RunResult fine =
      run_cli("maschke " + two_lines + " --alpha 1/2 --submodule " + block);
  CHECK(fine.exit_code == 0);
  Json ok = Json::parse(fine.out);
  CHECK(ok.at("dim") == 3);
}

TEST_CASE("components") {
  std::string two_lines = write_temp(
      "two_lines.json",
      R"({"points":["a","b","c","x","y","z"],"lines":[["a","b","c"],["x","y","z"]]})");
  RunResult r = run_cli("components " + two_lines + " --alpha 1/2");
  CHECK(r.exit_code == 0);
  Json report = Json::parse(r.out);
  CHECK(report.at("block_dims") == Json::array({3, 3}));

  std::string with_isolated = write_temp(
      "line_and_point.json",
      R"({"points":["a","b","c","x"],"lines":[["a","b","c"]]})");
  RunResult iso = run_cli("components " + with_isolated + " --alpha 1/2");
  CHECK(iso.exit_code == 0);
  CHECK(Json::parse(iso.out).at("block_dims") == Json::array({3, 1}));
}

TEST_CASE("find-regular sweep only") {
  RunResult r = run_cli("find-regular single_line --alpha 1/2 --sweep");
  CHECK(r.exit_code == 0);
  Json report = Json::parse(r.out);
  CHECK(report.at("one_eigenspace_dim") == 1);
  CHECK(report.at("sweep_nonzero") == Json::array({0}));
  CHECK_FALSE(report.contains("rank"));
}

TEST_CASE("reports can be written to a file") {
  std::string out = "/tmp/axial_cli_out.json";
  RunResult r = run_cli("universal sym_transpositions --n 4 --alpha 1/2 --out " + out);
  CHECK(r.exit_code == 0);
  CHECK(r.out.empty());
  std::ifstream file(out);
  REQUIRE(file.good());
  Json report = Json::parse(file);
  CHECK(report.at("u_order") == 24);
  CHECK(report.at("miy_order") == 24);
  CHECK(report.at("kernel_order") == 1);
}

TEST_CASE("input errors exit with code 2") {
  CHECK(run_cli("fusion-check --alpha 0 single_line").exit_code == 2);
  CHECK(run_cli("nonsense-subcommand").exit_code != 0);
  std::string bad = write_temp("bad.json", "{not json");
  CHECK(run_cli("verify-fischer " + bad).exit_code == 2);
}

TEST_CASE("text format flattens the report") {
  RunResult r = run_cli("universal single_line --alpha 1/2 --format text");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("u_order = 6") != std::string::npos);
}

TEST_CASE("emitted json re-parses to an equal value") {
  for (const std::string& cmd :
       {std::string("catalog affine_3"), std::string("matsuo dual_affine_2 --alpha 1/3"),
        std::string("universal single_line --alpha 1/2"),
        std::string("frobenius affine_3 --alpha 2")}) {
    RunResult r = run_cli(cmd);
    REQUIRE(r.exit_code == 0);
    Json parsed = Json::parse(r.out);
    CHECK(parsed.dump(2) + "\n" == r.out);
  }
}

TEST_CASE("library json round trips") {
  using namespace axial;
  PointLineGeometry g = catalog("dual_affine_2").geometry();
  CHECK(geometry_from_json(geometry_to_json(g)) == g);

  MatsuoAlgebra ma = matsuo(catalog("single_line"), Rational(1, 3));
  Json algebra = axial_algebra_to_json(ma.axial);
  AxialAlgebra back = axial_algebra_from_json(algebra);
  CHECK(back.algebra.products == ma.axial.algebra.products);
  CHECK(back.axes == ma.axial.axes);
  CHECK(axial_algebra_to_json(back) == algebra);

  Matrix m{{Rational(1, 2), Rational(-3)}, {Rational(0), Rational(7, 5)}};
  CHECK(matrix_from_json(matrix_to_json(m)) == m);

  AlgebraModule reg = regular_module(ma.axial);
  Json mod = module_to_json(reg, ma.axial.algebra.basis);
  AlgebraModule mod_back = module_from_json(mod, ma.axial.algebra.basis);
  CHECK(mod_back.actions == reg.actions);
}
