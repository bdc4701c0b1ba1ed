#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace mackey {

// Exact arbitrary-precision arithmetic.  Rational keeps lowest terms with a
// positive denominator; all determinant and pairing values flow through it
// so results are exact at any group size the element budget admits.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// "n" for integers, "n/d" otherwise.
std::string fraction_string(const Rational& value);

Rational rational_power(const Rational& base, unsigned long long exponent);

} // namespace mackey
