#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace magma {

// The ground field: exact rationals, always in lowest terms with a
// positive denominator (canonical form maintained by the backend).
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

// "p" when the denominator is 1, otherwise "p/q".
std::string rational_str(const Rational& r);

// Accepts an optional sign, an integer, and an optional "/denominator".
Rational parse_rational(std::string_view text);

}  // namespace magma
