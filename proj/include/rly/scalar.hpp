#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace rly {

/// Exact rational number. GMP keeps every result in lowest terms with a
/// positive denominator.
using Scalar = mpq_class;

/// Parses "p" or "p/q" (decimal digits, optional leading minus on p).
/// Throws ParseError on malformed input or q = 0.
Scalar parse_scalar(std::string_view text);

std::string to_string(const Scalar& s);

inline bool is_zero(const Scalar& s) { return sgn(s) == 0; }

}  // namespace rly
