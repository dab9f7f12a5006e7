#include "rly/report.hpp"

#include <sstream>

namespace rly {

void CheckResult::record(std::span<const std::size_t> tuple, std::span<const Scalar> diff) {
  ++tuples_checked;
  if (!passed || is_zero(diff)) return;
  passed = false;
  witness.assign(tuple.begin(), tuple.end());
  residual.assign(diff.begin(), diff.end());
}

void CheckResult::record(std::span<const std::size_t> tuple, const Matrix& diff) {
  record(tuple, std::span<const Scalar>(diff.entries()));
}

bool AxiomReport::passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

const CheckResult* AxiomReport::find(std::string_view name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

const CheckResult* AxiomReport::first_failure() const {
  for (const auto& c : checks)
    if (!c.passed) return &c;
  return nullptr;
}

CheckResult& AxiomReport::add(std::string name) {
  checks.push_back(CheckResult{});
  checks.back().name = std::move(name);
  return checks.back();
}

void AxiomReport::append(const AxiomReport& other, std::string_view prefix) {
  for (auto c : other.checks) {
    c.name = std::string(prefix) + c.name;
    checks.push_back(std::move(c));
  }
}

std::string format_report(const AxiomReport& report) {
  std::ostringstream out;
  for (const auto& c : report.checks) {
    out << (c.passed ? "PASS " : "FAIL ") << c.name << " (" << c.tuples_checked << " tuples)";
    if (c.internal_inconsistency) out << " [internal inconsistency]";
    if (!c.passed) {
      out << "\n     witness (";
      for (std::size_t i = 0; i < c.witness.size(); ++i) out << (i ? "," : "") << c.witness[i];
      out << ") residual [";
      for (std::size_t i = 0; i < c.residual.size(); ++i)
        out << (i ? " " : "") << to_string(c.residual[i]);
      out << "]";
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace rly
