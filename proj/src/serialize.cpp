#include "rly/serialize.hpp"

namespace rly {

Json scalar_to_json(const Scalar& s) { return to_string(s); }

Scalar scalar_from_json(const Json& j) {
  if (j.is_string()) return parse_scalar(j.get<std::string>());
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Scalar(std::to_string(j.get<std::uint64_t>()));
    return Scalar(std::to_string(j.get<std::int64_t>()));
  }
  fail(ErrorCode::ParseError, "expected a rational string or an integer, got " + j.dump());
}

Json vec_to_json(const Vec& v) {
  Json out = Json::array();
  for (const auto& s : v) out.push_back(scalar_to_json(s));
  return out;
}

Vec vec_from_json(const Json& j) {
  require(j.is_array(), ErrorCode::ParseError, "expected a list of scalars");
  Vec v;
  for (const auto& e : j) v.push_back(scalar_from_json(e));
  return v;
}

Json matrix_to_json(const Matrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    auto row = m.row(r);
    out.push_back(vec_to_json(Vec(row.begin(), row.end())));
  }
  return out;
}

Matrix matrix_from_json(const Json& j) {
  require(j.is_array(), ErrorCode::ParseError, "expected a list of rows");
  if (j.empty()) return Matrix();
  std::vector<Scalar> entries;
  std::size_t cols = 0;
  for (std::size_t r = 0; r < j.size(); ++r) {
    Vec row = vec_from_json(j[r]);
    if (r == 0) cols = row.size();
    require(row.size() == cols, ErrorCode::DimMismatch, "ragged matrix rows");
    for (auto& s : row) entries.push_back(std::move(s));
  }
  return Matrix(j.size(), cols, std::move(entries));
}

Json sparse_to_json(const Tensor& t) {
  Json out = Json::array();
  const auto& shape = t.shape();
  std::vector<std::size_t> idx(shape.size(), 0);
  for (std::size_t flat = 0; flat < t.size(); ++flat) {
    std::size_t rem = flat;
    for (std::size_t d = shape.size(); d-- > 0;) {
      idx[d] = rem % shape[d];
      rem /= shape[d];
    }
    const Scalar& s = t.data()[flat];
    if (is_zero(s)) continue;
    Json e = Json::array();
    for (auto i : idx) e.push_back(i);
    e.push_back(scalar_to_json(s));
    out.push_back(std::move(e));
  }
  return out;
}

Json to_json(const CheckResult& c) {
  Json j;
  j["name"] = c.name;
  j["passed"] = c.passed;
  j["tuples_checked"] = c.tuples_checked;
  j["witness"] = c.witness;
  j["residual"] = vec_to_json(c.residual);
  j["internal_inconsistency"] = c.internal_inconsistency;
  return j;
}

CheckResult check_result_from_json(const Json& j) {
  CheckResult c;
  c.name = j.at("name").get<std::string>();
  c.passed = j.at("passed").get<bool>();
  c.tuples_checked = j.at("tuples_checked").get<std::size_t>();
  c.witness = j.at("witness").get<std::vector<std::size_t>>();
  c.residual = vec_from_json(j.at("residual"));
  c.internal_inconsistency = j.at("internal_inconsistency").get<bool>();
  return c;
}

Json to_json(const AxiomReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back(to_json(c));
  return Json{{"passed", r.passed()}, {"checks", checks}};
}

AxiomReport axiom_report_from_json(const Json& j) {
  AxiomReport r;
  for (const auto& c : j.at("checks")) r.checks.push_back(check_result_from_json(c));
  return r;
}

Json to_json(const OrderReport& r) {
  Json orders = Json::array();
  for (const auto& o : r.orders) orders.push_back(to_json(o));
  return Json{{"passed", r.passed()}, {"orders", orders}};
}

OrderReport order_report_from_json(const Json& j) {
  OrderReport r;
  for (const auto& o : j.at("orders")) r.orders.push_back(axiom_report_from_json(o));
  return r;
}

Json to_json(const DegreeRow& r) {
  return Json{{"degree", r.degree},
              {"dim", r.dim_cochain},
              {"kernel", r.dim_kernel},
              {"image_in", r.dim_image_incoming},
              {"rank_out", r.rank_outgoing},
              {"betti", r.betti}};
}

DegreeRow degree_row_from_json(const Json& j) {
  DegreeRow r;
  r.degree = j.at("degree").get<std::size_t>();
  r.dim_cochain = j.at("dim").get<std::size_t>();
  r.dim_kernel = j.at("kernel").get<std::size_t>();
  r.dim_image_incoming = j.at("image_in").get<std::size_t>();
  r.rank_outgoing = j.at("rank_out").get<std::size_t>();
  r.betti = j.at("betti").get<std::size_t>();
  return r;
}

Json to_json(const ComplexReport& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows) rows.push_back(to_json(row));
  Json j{{"complex", std::string(to_string(r.kind))},
         {"rows", rows},
         {"top_dim", r.top_dim},
         {"top_image", r.top_image},
         {"squares_vanish", r.squares_vanish}};
  j["chain_map"] = r.chain_map ? Json(*r.chain_map) : Json(nullptr);
  return j;
}

ComplexReport complex_report_from_json(const Json& j) {
  ComplexReport r;
  r.kind = parse_complex_kind(j.at("complex").get<std::string>());
  for (const auto& row : j.at("rows")) r.rows.push_back(degree_row_from_json(row));
  r.top_dim = j.at("top_dim").get<std::size_t>();
  r.top_image = j.at("top_image").get<std::size_t>();
  r.squares_vanish = j.at("squares_vanish").get<bool>();
  if (!j.at("chain_map").is_null()) r.chain_map = j.at("chain_map").get<bool>();
  return r;
}

Json to_json(const ExtensionCocycle& c) {
  return Json{{"nu", sparse_to_json(c.nu)}, {"psi", sparse_to_json(c.psi)}, {"chi", matrix_to_json(c.chi)}};
}

}  // namespace rly
