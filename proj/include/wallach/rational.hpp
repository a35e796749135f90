#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace wallach {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Accepts "p/q", plain integers, and decimal strings. Decimals are scaled by
/// powers of ten, so "0.25" becomes exactly 1/4 (never a binary float).
Rational parse_rational(const std::string& text);

/// "p/q" when the denominator is not 1, "p" otherwise.
std::string rational_str(const Rational& r);

double to_double(const Rational& r);

/// -1, 0, or +1.
int sign_of(const Rational& r);

}  // namespace wallach
