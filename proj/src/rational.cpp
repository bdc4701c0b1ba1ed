#include "mackey/rational.hpp"

namespace mackey {

std::string fraction_string(const Rational& value) {
  std::string text = numerator(value).str();
  if (denominator(value) != 1) {
    text += "/";
    text += denominator(value).str();
  }
  return text;
}

Rational rational_power(const Rational& base, unsigned long long exponent) {
  Rational result = 1;
  Rational square = base;
  while (exponent > 0) {
    if (exponent & 1ull) result *= square;
    square *= square;
    exponent >>= 1;
  }
  return result;
}

} // namespace mackey
