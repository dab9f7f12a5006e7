#pragma once

#include "rly/deformation.hpp"
#include "rly/error.hpp"
#include "rly/extension.hpp"

#include <json.hpp>

namespace rly {

using Json = nlohmann::ordered_json;

/// Scalars are written as "p/q" strings; integers may also be read as JSON
/// numbers. Non-integral JSON numbers are rejected (ParseError).
Json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const Json& j);

Json vec_to_json(const Vec& v);
Vec vec_from_json(const Json& j);

/// Row lists.
Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

/// Nonzero entries as [i, j, ..., "p/q"].
Json sparse_to_json(const Tensor& t);

Json to_json(const CheckResult& c);
CheckResult check_result_from_json(const Json& j);
Json to_json(const AxiomReport& r);
AxiomReport axiom_report_from_json(const Json& j);
Json to_json(const OrderReport& r);
OrderReport order_report_from_json(const Json& j);
Json to_json(const DegreeRow& r);
DegreeRow degree_row_from_json(const Json& j);
Json to_json(const ComplexReport& r);
ComplexReport complex_report_from_json(const Json& j);
Json to_json(const ExtensionCocycle& c);

}  // namespace rly
