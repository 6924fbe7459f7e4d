#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace wst {

// Exact rational scalar used throughout the library.
using Rational = mpq_class;

Rational make_rational(long num, long den = 1);

// Accepts "p", "-p", "p/q" (q > 0) and finite decimals like "0.25" or "-1.5".
// Throws SyntaxError-free std::invalid_argument on anything else; callers that
// need positioned diagnostics wrap it.
Rational parse_rational(std::string_view text);

// Canonical form: "p" when the denominator is 1, otherwise "p/q" with q > 0.
std::string to_string(const Rational& value);

double to_double(const Rational& value);

Rational abs(const Rational& value);

// value^exp for possibly negative exp; throws ZeroScalar on 0^negative.
Rational pow_int(const Rational& value, long exp);

// Exact square root of a perfect-square rational; throws ZeroScalar on
// negative input and std::domain_error when no exact root exists.
Rational sqrt_exact(const Rational& value);

bool is_perfect_square(const Rational& value);

}  // namespace wst
