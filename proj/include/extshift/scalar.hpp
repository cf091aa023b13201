#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace extshift {

/// Exact rational scalar. GMP keeps it canonical: gcd(num, den) = 1, den > 0.
using Scalar = mpq_class;

/// "3", "-1/2"
std::string to_string(const Scalar& x);

/// Parses an integer or "p/q"; throws ParseError on malformed text or q = 0.
Scalar parse_scalar(std::string_view text);

inline bool is_zero(const Scalar& x) { return sgn(x) == 0; }

}  // namespace extshift
