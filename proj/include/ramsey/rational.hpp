#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace ramsey {

/// Exact arbitrary-precision fraction, always kept in lowest terms.
using Rational = mpq_class;

/// "p/q" with q > 0, also for integers ("2/1").
std::string to_string(const Rational& q);

/// Accepts "p/q", "-7", and finite decimals such as "0.3" or "1e-3"; the
/// decimal forms are converted exactly (0.3 -> 3/10).
Rational parse_rational(std::string_view text);

/// Exact conversion of a finite double (every double is a dyadic rational).
Rational from_double(double x);

double to_double(const Rational& q);

bool is_integer(const Rational& q);

/// base^exponent for a non-negative integer exponent.
Rational pow(const Rational& base, unsigned long exponent);

} // namespace ramsey
