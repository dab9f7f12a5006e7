#include "rly/cli.hpp"
#include "rly/serialize.hpp"
#include "rly/representation.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <unistd.h>

using namespace rly;

namespace {

const std::string kSample = RLY_DATA_DIR "/two_dim_example.json";

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& text) {
  auto dir = std::filesystem::temp_directory_path() / ("rly_cli_tests_" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  auto path = dir / name;
  std::ofstream(path) << text;
  return path.string();
}

std::vector<std::size_t> dims(const Json& report) {
  std::vector<std::size_t> out;
  for (const auto& row : report.at("rows")) out.push_back(row.at("dim").get<std::size_t>());
  out.push_back(report.at("top_dim").get<std::size_t>());
  return out;
}

const ReynoldsOperator kR{Matrix{{2, 3}, {0, 5}}, Scalar(-1, 5)};

}  // namespace

TEST_CASE("verify the sample operator") {
  Run r = run({"verify", kSample, "--name", "T"});
  CHECK(r.code == 0);
  CHECK(r.out.find("PASS reynolds_binary") != std::string::npos);
}

TEST_CASE("flipped weight exits 1 with a witness at (e1, e2)") {
  Run r = run({"verify", kSample, "--name", "T_bad", "--json"});
  CHECK(r.code == 1);
  Json j = Json::parse(r.out);
  AxiomReport rep = axiom_report_from_json(j.at("report"));
  const CheckResult* f = rep.first_failure();
  REQUIRE(f);
  CHECK(f->name == "reynolds_binary");
  CHECK(f->witness == std::vector<std::size_t>{0, 1});
  CHECK(rep == verify_reynolds(examples::two_dim(), {kR.matrix, Scalar(1, 5)}));
}

TEST_CASE("empty algebra passes vacuously") {
  std::string path = write_temp("empty.json", R"({"algebras": [{"name": "E", "dim": 0}]})");
  CHECK(run({"verify", path, "--name", "E"}).code == 0);
}

TEST_CASE("input errors exit 2") {
  std::string broken = write_temp("broken.json", "{\"algebras\": [\n  {\"name\": \"L\" \"dim\": 1}]}");
  Run r = run({"verify", broken, "--name", "L"});
  CHECK(r.code == 2);
  CHECK(r.err.find("ParseError") != std::string::npos);
  CHECK(r.err.find("broken.json:2:") != std::string::npos);
  CHECK(run({"verify", kSample, "--name", "missing"}).code == 2);
  CHECK(run({"verify", kSample}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  std::string mismatch = write_temp(
      "mismatch.json", R"({"algebras": [{"name": "L", "dim": 2}], "operators": [{"name": "T", "algebra": "L", "matrix": [[1]]}]})");
  Run m = run({"verify", mismatch, "--name", "T"});
  CHECK(m.code == 2);
  CHECK(m.err.find("DimMismatch") != std::string::npos);
}

TEST_CASE("verify every kind of object in the sample") {
  for (const char* name : {"L", "T", "Id", "ad", "ad_id", "bracket_cochain", "scaled_bracket", "semidirect"}) {
    CAPTURE(name);
    CHECK(run({"verify", kSample, "--name", name}).code == 0);
  }
}

TEST_CASE("cohomology tables of the sample") {
  Run ly = run({"cohomology", kSample, "--algebra", "L", "--operator", "T", "--rep", "ad", "--complex", "ly",
                "--max-degree", "3", "--json"});
  CHECK(ly.code == 0);
  CHECK(dims(Json::parse(ly.out).at("report")) == std::vector<std::size_t>{4, 6, 6, 6});
  Run rly = run({"cohomology", kSample, "--algebra", "L", "--operator", "T", "--rep", "ad", "--complex", "rly",
                 "--max-degree", "3", "--json"});
  CHECK(rly.code == 0);
  Json j = Json::parse(rly.out);
  CHECK(dims(j.at("report")) == std::vector<std::size_t>{4, 10, 12, 12});
  LyAlgebra a = examples::two_dim();
  CHECK(complex_report_from_json(j.at("report")) == cohomology_dims(a, kR, adjoint_rep(a, kR), ComplexKind::RLY, 3));
  Run text = run({"cohomology", kSample, "--algebra", "L", "--operator", "T", "--rep", "ad", "--complex", "rly"});
  CHECK(text.out.find("chain map: PASS") != std::string::npos);
  CHECK(text.out.find("d o d = 0: PASS") != std::string::npos);
}

TEST_CASE("cohomology refuses a failing operator") {
  Run r = run({"cohomology", kSample, "--algebra", "L", "--operator", "T_bad", "--rep", "ad", "--complex", "rly"});
  CHECK(r.code == 1);
  CHECK(r.out.find("FAIL operator.reynolds_binary") != std::string::npos);
  CHECK(run({"cohomology", kSample, "--algebra", "L", "--rep", "ad", "--complex", "ro"}).code == 2);
}

TEST_CASE("abelian algebra with zero module: betti equals cochain dimension") {
  std::string path = write_temp("abelian.json", R"({
    "algebras": [{"name": "A", "dim": 2}],
    "operators": [{"name": "Z", "algebra": "A", "matrix": [[0, 0], [0, 0]], "weight": "1/2"}],
    "representations": [{"name": "V", "kind": "zero", "algebra": "A", "module_dim": 1, "module_op": [[0]], "operator": "Z"}]})");
  for (const char* k : {"ly", "ro", "rly"}) {
    Run r = run({"cohomology", path, "--algebra", "A", "--operator", "Z", "--rep", "V", "--complex", k, "--json"});
    CHECK(r.code == 0);
    for (const auto& row : Json::parse(r.out).at("report").at("rows")) CHECK(row.at("betti") == row.at("dim"));
  }
  Run c = run({"classify-extensions", path, "--algebra", "A", "--operator", "Z", "--rep", "V", "--json"});
  CHECK(c.code == 0);
  Json j = Json::parse(c.out);
  // C^2_LY has one f block and two g blocks of size 1, C^1_RO has two.
  CHECK(j.at("admissible") == 3 + 2);
  CHECK(j.at("betti2") == j.at("admissible"));
  for (const auto& rep : j.at("representatives")) CHECK(rep.at("verified") == true);
}

TEST_CASE("classification count matches betti(2)") {
  Run r = run({"classify-extensions", kSample, "--algebra", "L", "--operator", "T", "--rep", "ad", "--json"});
  CHECK(r.code == 0);
  Json j = Json::parse(r.out);
  LyAlgebra a = examples::two_dim();
  std::size_t betti2 = cohomology_dims(a, kR, adjoint_rep(a, kR), ComplexKind::RLY, 2).rows[1].betti;
  CHECK(j.at("betti2") == betti2);
  CHECK(j.at("admissible") == betti2);
  CHECK(j.at("representatives").size() == betti2);
  CHECK(j.at("semidirect_only") == false);
}

TEST_CASE("trivial second cohomology") {
  // One-dimensional abelian algebra, T = 1, T_V = 2: d^1 h = -(hT - T_V h) = h
  // is onto the one-dimensional C^2.
  std::string path = write_temp("trivial.json", R"({
    "algebras": [{"name": "A", "dim": 1}],
    "operators": [{"name": "T", "algebra": "A", "matrix": [[1]], "weight": "0"}],
    "representations": [{"name": "V", "kind": "zero", "algebra": "A", "module_dim": 1, "module_op": [[2]], "operator": "T"}]})");
  Run r = run({"classify-extensions", path, "--algebra", "A", "--operator", "T", "--rep", "V"});
  CHECK(r.code == 0);
  CHECK(r.out.find("betti(2) of the rly complex: 0") != std::string::npos);
  CHECK(r.out.find("all extensions equivalent to the semidirect product") != std::string::npos);
}

TEST_CASE("deform-check orders") {
  Run r = run({"deform-check", kSample, "--order", "1", "--json"});
  CHECK(r.code == 0);
  Json j = Json::parse(r.out);
  REQUIRE(j.at("deformations").size() == 1);
  const Json& d = j.at("deformations")[0];
  CHECK(d.at("infinitesimal_cocycle") == true);
  CHECK(d.at("infinitesimal_coboundary") == false);
  LyAlgebra a = examples::two_dim();
  auto def = TruncatedDeformation::constant(a, kR, 1);
  def.F[1] = a.binary();
  OrderReport expected = verify_deformation(a, kR, def);
  OrderReport parsed = order_report_from_json(d.at("report"));
  REQUIRE(parsed.orders.size() == expected.orders.size());
  for (std::size_t n = 0; n < parsed.orders.size(); ++n) CHECK(parsed.orders[n] == expected.orders[n]);
  CHECK(run({"deform-check", kSample, "--order", "5"}).code == 2);
}

TEST_CASE("deform-check reports a failing order") {
  std::string path = write_temp("bad_def.json", R"({
    "algebras": [{"name": "L", "dim": 2, "binary": [[0, 1, 0, "1"]], "ternary": [[0, 1, 1, 0, "1"]]}],
    "operators": [{"name": "T", "algebra": "L", "matrix": [[2, 3], [0, 5]], "weight": "-1/5"}],
    "deformations": [{"name": "D", "algebra": "L", "operator": "T", "order": 1,
                      "terms": [{"operator": [[0, 0], [1, 0]]}]}]})");
  CHECK(run({"deform-check", path, "--order", "0"}).code == 0);
  Run r = run({"deform-check", path, "--order", "1"});
  CHECK(r.code == 1);
  CHECK(r.out.find("FAIL") != std::string::npos);
}

TEST_CASE("json reports are stable across runs") {
  std::vector<std::string> args{"classify-extensions", kSample, "--algebra", "L", "--operator", "T", "--rep", "ad", "--json"};
  CHECK(run(args).out == run(args).out);
}

TEST_CASE("explicit extension given by its total algebra") {
  LyAlgebra a = examples::two_dim();
  auto [sd, op] = semidirect_product(a, kR, adjoint_rep(a, kR));
  Matrix inject(4, 2), project(2, 4);
  inject(2, 0) = inject(3, 1) = 1;
  project(0, 0) = project(1, 1) = 1;
  auto doc = [&](const Matrix& total_op) {
    Json j;
    j["algebras"] = Json::array({Json{{"name", "L"}, {"dim", 2}, {"binary", sparse_to_json(a.binary())},
                                      {"ternary", sparse_to_json(a.ternary())}},
                                 Json{{"name", "H"}, {"dim", 4}, {"binary", sparse_to_json(sd.binary())},
                                      {"ternary", sparse_to_json(sd.ternary())}}});
    j["operators"] = Json::array({Json{{"name", "T"}, {"algebra", "L"}, {"matrix", matrix_to_json(kR.matrix)},
                                       {"weight", "-1/5"}},
                                  Json{{"name", "TH"}, {"algebra", "H"}, {"matrix", matrix_to_json(total_op)},
                                       {"weight", "-1/5"}}});
    j["extensions"] = Json::array({Json{{"name", "E"}, {"algebra", "L"}, {"operator", "T"}, {"total", "H"},
                                        {"total_operator", "TH"}, {"inject", matrix_to_json(inject)},
                                        {"project", matrix_to_json(project)}}});
    return j.dump();
  };
  CHECK(run({"verify", write_temp("explicit.json", doc(op.matrix)), "--name", "E"}).code == 0);
  Matrix wrong = op.matrix;
  wrong(0, 2) = 1;
  Run r = run({"verify", write_temp("explicit_bad.json", doc(wrong)), "--name", "E"});
  CHECK(r.code == 1);
  CHECK(r.out.find("FAIL") != std::string::npos);
}
