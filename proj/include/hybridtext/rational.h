#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace hybridtext {

// Exact arithmetic for probabilities, thresholds, and fractions. Every
// quantity that ends up in a model file or a decision comparison uses this.
// Under C++20 `r == 0` recurses forever through boost's mixed operators;
// compare against Rational(0) or numerator() instead.
using Rational = boost::rational<std::int64_t>;

// Parses "0.05", "1/20", "3" or ".5" into an exact rational. Throws
// std::invalid_argument on anything else.
Rational parse_rational(std::string_view text);

// "num/den" (always with the slash, even for integers).
std::string to_fraction_string(const Rational& value);

// Decimal rendering rounded half away from zero to `digits` places. With
// `trim`, trailing zeros (and a dangling point) are removed.
std::string to_decimal_string(const Rational& value, int digits, bool trim = false);

double to_double(const Rational& value);

// floor(value + 1/2) for non-negative values.
std::int64_t round_half_up(const Rational& value);

// Smallest integer >= value.
std::int64_t ceil(const Rational& value);

}  // namespace hybridtext
