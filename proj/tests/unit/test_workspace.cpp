#include "rly/error.hpp"
#include "rly/workspace.hpp"

#include <doctest.h>

using namespace rly;

namespace {

Workspace ws(const std::string& text) { return Workspace::from_text({{"input.json", text}}); }

ErrorCode code_of(const std::string& text) {
  try {
    ws(text);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error");
  return ErrorCode::InvalidInput;
}

std::string message_of(const std::string& text) {
  try {
    ws(text);
  } catch (const Error& e) {
    return e.what();
  }
  return {};
}

const char* kAlgebra = R"({"algebras": [{"name": "L", "dim": 2, "binary": [[0, 1, 0, "1"]],
  "ternary": [[0, 1, 1, 0, "1"]]}]})";

}  // namespace

TEST_CASE("sample file loads") {
  Workspace w = Workspace::load({RLY_DATA_DIR "/two_dim_example.json"});
  CHECK(w.algebra("L") == examples::two_dim());
  CHECK(w.op("T").op.weight == Scalar(-1, 5));
  CHECK(w.kind_of("ad") == ObjectKind::Representation);
  CHECK(w.rep("ad").rep == adjoint_rep(examples::two_dim(), w.op("T").op));
  CHECK(w.cochain("bracket_cochain").coords.size() == 10);
  CHECK(w.deformation("scaled_bracket").def.order() == 1);
  CHECK_FALSE(w.kind_of("nothing"));
  CHECK_THROWS_WITH_AS(w.algebra("T"), doctest::Contains("NameNotFound"), Error);
}

TEST_CASE("antisymmetric images are filled in") {
  Workspace w = ws(kAlgebra);
  CHECK(w.algebra("L").binary()(1, 0, 0) == -1);
  CHECK(w.algebra("L").ternary()(1, 0, 1, 0) == -1);
  Workspace both = ws(R"({"algebras": [{"name": "L", "dim": 2, "binary": [[0, 1, 0, "1/2"], [1, 0, 0, "-1/2"]]}]})");
  CHECK(both.algebra("L").binary()(0, 1, 0) == Scalar(1, 2));
}

TEST_CASE("inconsistent antisymmetric image is a load error") {
  std::string text = R"({"algebras": [{"name": "L", "dim": 2, "binary": [[0, 1, 0, "1"], [1, 0, 0, "1"]]}]})";
  CHECK(code_of(text) == ErrorCode::InvalidInput);
  CHECK(message_of(text).find("antisymmetric image") != std::string::npos);
  CHECK(code_of(R"({"algebras": [{"name": "L", "dim": 2, "binary": [[1, 1, 0, "1"]]}]})") == ErrorCode::InvalidInput);
}

TEST_CASE("parse errors carry line and column") {
  std::string text = "{\n  \"algebras\": [\n    {\"name\": \"L\", \"dim\": 2,,}\n  ]\n}\n";
  CHECK(code_of(text) == ErrorCode::ParseError);
  CHECK(message_of(text).find("input.json:3:") != std::string::npos);
  CHECK(code_of(R"({"algebras": [{"name": "L", "dim": 2, "binary": [[0, 1, 0, "1/0"]]}]})") == ErrorCode::ParseError);
  CHECK(code_of(R"({"algebras": [{"name": "L", "dim": 2, "binary": [[0, 1, 0, 0.5]]}]})") == ErrorCode::ParseError);
  CHECK(code_of(R"({"shapes": []})") == ErrorCode::ParseError);
}

TEST_CASE("unresolved names and dimension mismatches") {
  CHECK(code_of(R"({"operators": [{"name": "T", "algebra": "M", "matrix": [[1]]}]})") == ErrorCode::NameNotFound);
  std::string bad_matrix = std::string(kAlgebra).substr(0, std::string(kAlgebra).size() - 1) +
                           R"(, "operators": [{"name": "T", "algebra": "L", "matrix": [[1, 0, 0]]}]})";
  CHECK(code_of(bad_matrix) == ErrorCode::DimMismatch);
  CHECK(code_of(R"({"algebras": [{"name": "L", "dim": 2, "binary": [[0, 2, 0, "1"]]}]})") == ErrorCode::DimMismatch);
  CHECK(message_of(bad_matrix).find("/operators/0") != std::string::npos);
}

TEST_CASE("references resolve across files") {
  Workspace w = Workspace::from_text({
      {"b.json", R"({"operators": [{"name": "T", "algebra": "L", "matrix": [["2", "3"], ["0", "5"]], "weight": "-1/5"}],
                   "representations": [{"name": "ad", "kind": "adjoint", "algebra": "L", "operator": "T"}]})"},
      {"a.json", kAlgebra},
  });
  CHECK(w.rep("ad").rep.module_op() == w.op("T").op.matrix);
  CHECK_THROWS_AS(Workspace::from_text({{"a.json", kAlgebra}, {"b.json", kAlgebra}}), Error);
}

TEST_CASE("explicit representations and other algebra kinds") {
  Workspace w = ws(R"({
    "algebras": [
      {"name": "sl2", "kind": "lie", "dim": 3, "binary": [[0, 1, 1, 2], [0, 2, 2, -2], [1, 2, 0, 1]]},
      {"name": "lb", "kind": "leibniz", "dim": 3, "product": [[0, 2, 0, -1], [2, 0, 0, 1], [2, 1, 1, -1]]},
      {"name": "m", "kind": "reductive", "lie_dim": 3, "binary": [[0, 1, 1, 2], [0, 2, 2, -2], [1, 2, 0, 1]],
       "subalgebra": [0], "complement": [1, 2]},
      {"name": "z", "dim": 0}
    ],
    "representations": [
      {"name": "v", "algebra": "sl2", "module_dim": 1},
      {"name": "w", "algebra": "sl2", "module_dim": 2, "rho": [{"x": 0, "matrix": [[1, 0], [0, -1]]}],
       "theta": [{"x": 1, "y": 2, "matrix": [[0, 1], [0, 0]]}], "module_op": [[1, 0], [0, 1]]}
    ]})");
  CHECK(w.algebra("sl2") == examples::sl2());
  CHECK(w.algebra("lb") == from_leibniz(examples::leibniz_sample()));
  CHECK(w.algebra("m").dim() == 2);
  CHECK(w.algebra("z").dim() == 0);
  CHECK(w.rep("v").rep == Representation::zero(3, 1));
  CHECK(w.rep("w").rep.theta(1, 2) == (Matrix{{0, 1}, {0, 0}}));
  CHECK(w.rep("w").rep.module_op());
}
