#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace gstruct {

/// Arbitrary precision rational, always kept in lowest terms with positive denominator.
using Rational = mpq_class;

/// Parses "n", "-n" or "n/d". Rejects zero denominators, whitespace and anything else.
Rational parse_rational(std::string_view text);

/// "n/d", or "n" when the denominator is 1.
std::string to_string(const Rational& value);

inline int sign(const Rational& value) { return sgn(value); }

}  // namespace gstruct
