#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace ptgeom {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// "p" when the denominator is 1, "p/q" otherwise.
std::string rational_to_string(const Rational& r);

// Accepts "p" and "p/q" with optional leading '-'.
Rational rational_from_string(const std::string& s);

}  // namespace ptgeom
