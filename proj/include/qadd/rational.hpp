#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

#include "qadd/errors.hpp"

namespace qadd {

using Integer = boost::multiprecision::cpp_int;

/// Exact rational scalar. Always stored normalized: reduced to lowest terms
/// with a positive denominator (the backing type maintains this invariant,
/// but refuses to normalize a negative denominator itself -- go through
/// make_rational when the sign of the denominator is not known).
using Rational = boost::multiprecision::cpp_rational;

/// num/den with sign normalization. Throws DivisionByZero when den == 0.
Rational make_rational(Integer num, Integer den);

/// Parses "a" or "a/b" with an optional leading '-'. Throws SyntaxError on
/// malformed input and DivisionByZero on a zero denominator.
Rational parse_rational(std::string_view text);

/// "a" for integral values, "a/b" otherwise; '-' prefix when negative.
std::string to_string(const Rational& value);

}  // namespace qadd
