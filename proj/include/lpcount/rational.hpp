#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

#include "lpcount/errors.hpp"

namespace lpcount {

using Int = boost::multiprecision::cpp_int;

/// Exact rational scalar. Stored in lowest terms with positive denominator;
/// all arithmetic is exact. No floating point is used anywhere in the
/// numeric core.
using Rational = boost::multiprecision::cpp_rational;

bool is_integer(const Rational& q);

/// Requires is_integer(q).
Int to_integer(const Rational& q);

Int rational_floor(const Rational& q);
Int rational_ceil(const Rational& q);

/// Parses "p" or "p/q" with decimal integer p and positive q.
/// Throws ParseError on anything else (no whitespace, no floats).
Rational parse_rational(const std::string& text);

/// Renders "p" when integral, "p/q" otherwise.
std::string format_rational(const Rational& q);

/// base^exponent with exponent >= 0.
Rational rational_pow(const Rational& base, int exponent);

Int factorial(int m);
Int binomial(int n, int k);

}  // namespace lpcount
