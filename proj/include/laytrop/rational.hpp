#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace laytrop {

using Rational = mpq_class;
using Integer = mpz_class;

/// Parses `p`, `p/q`, or a decimal such as `-4.25` into an exact rational.
/// Throws Error(Parse) on malformed input.
Rational parse_rational(std::string_view text);

/// Lowest-terms `p/q`, or `p` when the denominator is one.
std::string to_string(const Rational& q);

bool is_integer(const Rational& q);
Integer floor_div(const Integer& a, const Integer& b);

/// Least common multiple of all denominators.
Integer common_denominator(const std::vector<Rational>& values);

} // namespace laytrop
