#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "dstoch/errors.hpp"

namespace dstoch {

using BigInt = boost::multiprecision::cpp_int;

// Exact fraction p/q. Always reduced, denominator always positive; both are
// maintained by the backend after every operation, so equality is plain
// component equality.
using Rational = boost::multiprecision::cpp_rational;

// Builds p/q from separate parts, moving the sign to the numerator.
// Throws ParseError on a zero denominator.
Rational make_rational(BigInt numerator, BigInt denominator);

// Accepts "p/q" or a bare integer "p", with optional leading '-'.
Rational parse_rational(std::string_view text);

// Canonical form: "p/q", or just "p" when the denominator is 1.
std::string to_string(const Rational& value);

}  // namespace dstoch
