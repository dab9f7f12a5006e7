#include "rly/scalar.hpp"

#include "rly/error.hpp"

#include <cctype>

namespace rly {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DimMismatch: return "DimMismatch";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::NameNotFound: return "NameNotFound";
    case ErrorCode::CompositionNotZero: return "CompositionNotZero";
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::NotLieAlgebra: return "NotLieAlgebra";
    case ErrorCode::NotLeibniz: return "NotLeibniz";
    case ErrorCode::NotReductive: return "NotReductive";
    case ErrorCode::InvalidReynolds: return "InvalidReynolds";
    case ErrorCode::NotDerivation: return "NotDerivation";
    case ErrorCode::ZeroScale: return "ZeroScale";
    case ErrorCode::MissingModuleOp: return "MissingModuleOp";
    case ErrorCode::MixedAlgebras: return "MixedAlgebras";
    case ErrorCode::DegreeOutOfRange: return "DegreeOutOfRange";
    case ErrorCode::OrderTooLow: return "OrderTooLow";
    case ErrorCode::OrderMismatch: return "OrderMismatch";
    case ErrorCode::NotCoboundary: return "NotCoboundary";
    case ErrorCode::NotCocycle: return "NotCocycle";
    case ErrorCode::NotAdmissible: return "NotAdmissible";
    case ErrorCode::NotSection: return "NotSection";
    case ErrorCode::IncompatibleData: return "IncompatibleData";
    case ErrorCode::InternalInconsistency: return "InternalInconsistency";
  }
  return "Unknown";
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Scalar parse_scalar(std::string_view text) {
  const std::string original(text);
  std::string_view num = text;
  std::string_view den = "1";
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
  }
  std::string_view digits = num;
  if (!digits.empty() && digits.front() == '-') digits.remove_prefix(1);
  if (!all_digits(digits) || !all_digits(den))
    fail(ErrorCode::ParseError, "malformed rational literal '" + original + "'");

  mpz_class q(std::string(den), 10);
  if (q == 0) fail(ErrorCode::ParseError, "zero denominator in '" + original + "'");
  Scalar s(mpz_class(std::string(num), 10), q);
  s.canonicalize();
  return s;
}

std::string to_string(const Scalar& s) { return s.get_str(10); }

}  // namespace rly
