#pragma once

#include "rly/matrix.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace rly {

/// Outcome of evaluating one identity over every basis tuple.
struct CheckResult {
  std::string name;
  bool passed = true;
  /// First failing basis tuple in lexicographic order (empty on pass).
  std::vector<std::size_t> witness;
  /// LHS - RHS at the witness, flattened (a vector or a matrix, row-major).
  Vec residual;
  std::size_t tuples_checked = 0;
  /// Set when an identity that must follow from passing ones fails.
  bool internal_inconsistency = false;

  /// Records one evaluated tuple. Only the first failure is kept.
  void record(std::span<const std::size_t> tuple, std::span<const Scalar> lhs_minus_rhs);
  void record(std::span<const std::size_t> tuple, const Matrix& lhs_minus_rhs);

  friend bool operator==(const CheckResult&, const CheckResult&) = default;
};

struct AxiomReport {
  std::vector<CheckResult> checks;

  bool passed() const;
  /// nullptr when absent.
  const CheckResult* find(std::string_view name) const;
  const CheckResult* first_failure() const;
  CheckResult& add(std::string name);
  void append(const AxiomReport& other, std::string_view prefix = {});

  friend bool operator==(const AxiomReport&, const AxiomReport&) = default;
};

/// Human-readable multi-line rendering, one line per identity.
std::string format_report(const AxiomReport& report);

}  // namespace rly
