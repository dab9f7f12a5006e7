#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace rly {

enum class ErrorCode {
  DimMismatch,
  ShapeMismatch,
  IndexOutOfRange,
  InvalidInput,
  ParseError,
  NameNotFound,
  CompositionNotZero,
  SingularMatrix,
  NotLieAlgebra,
  NotLeibniz,
  NotReductive,
  InvalidReynolds,
  NotDerivation,
  ZeroScale,
  MissingModuleOp,
  MixedAlgebras,
  DegreeOutOfRange,
  OrderTooLow,
  OrderMismatch,
  NotCoboundary,
  NotCocycle,
  NotAdmissible,
  NotSection,
  IncompatibleData,
  InternalInconsistency,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the engine carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code), detail_(message) {}

  ErrorCode code() const noexcept { return code_; }
  /// The message without the code prefix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

inline void require(bool cond, ErrorCode code, const std::string& message) {
  if (!cond) fail(code, message);
}

}  // namespace rly
