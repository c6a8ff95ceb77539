#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace pht {

/// Exact rational number in canonical form (gcd 1, positive denominator).
using Rational = mpq_class;

/// Parses "p" or "p/q" with an optional leading '-'. The result is reduced.
Rational parse_rational(std::string_view text);

/// Lowest terms, "p" when the denominator is 1.
std::string format_rational(const Rational& value);

}  // namespace pht
