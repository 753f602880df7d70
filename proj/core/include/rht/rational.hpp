#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace rht {

using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p/q" or "p" (optional leading sign). Throws ParseError.
Rational parse_rational(std::string_view text);

/// Canonical text: "p" when the denominator is one, else "p/q".
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

/// Least common multiple of denominators.
Integer common_denominator(const std::vector<Rational>& values);

}  // namespace rht
