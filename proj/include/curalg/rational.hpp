#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace curalg {

using Rational = mpq_class;

/// Renders as "p/q", or "p" when the denominator is one.
std::string to_string(const Rational& q);

/// Accepts "p", "-p" and "p/q". Throws std::invalid_argument on malformed input.
Rational parse_rational(std::string_view text);

Rational factorial(int n);
Rational binomial(int n, int k);
Rational power(const Rational& base, int exponent);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

}  // namespace curalg
