#include "hybridtext/rational.h"

#include <cctype>
#include <stdexcept>

namespace hybridtext {
namespace {

__extension__ using Int128 = __int128;

std::int64_t parse_digits(std::string_view digits, std::string_view whole) {
  if (digits.empty() || digits.size() > 18) {
    throw std::invalid_argument("not a number: '" + std::string(whole) + "'");
  }
  std::int64_t value = 0;
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw std::invalid_argument("not a number: '" + std::string(whole) + "'");
    }
    value = value * 10 + (c - '0');
  }
  return value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  Rational result;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    const std::int64_t den = parse_digits(body.substr(slash + 1), text);
    if (den == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
    result = Rational(parse_digits(body.substr(0, slash), text), den);
  } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
    const std::string_view int_part = body.substr(0, dot);
    const std::string_view frac_part = body.substr(dot + 1);
    if (int_part.empty() && frac_part.empty()) {
      throw std::invalid_argument("not a number: '" + std::string(text) + "'");
    }
    if (int_part.size() + frac_part.size() > 18) {
      throw std::invalid_argument("too many digits: '" + std::string(text) + "'");
    }
    std::int64_t scale = 1;
    for (std::size_t i = 0; i < frac_part.size(); ++i) scale *= 10;
    const std::int64_t whole = int_part.empty() ? 0 : parse_digits(int_part, text);
    const std::int64_t frac = frac_part.empty() ? 0 : parse_digits(frac_part, text);
    result = Rational(whole * scale + frac, scale);
  } else {
    result = Rational(parse_digits(body, text));
  }
  return negative ? -result : result;
}

std::string to_fraction_string(const Rational& value) {
  return std::to_string(value.numerator()) + "/" + std::to_string(value.denominator());
}

std::string to_decimal_string(const Rational& value, int digits, bool trim) {
  const bool negative = value.numerator() < 0;
  const Int128 num = negative ? -static_cast<Int128>(value.numerator()) : value.numerator();
  const Int128 den = value.denominator();
  Int128 scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  const Int128 scaled = (2 * num * scale + den) / (2 * den);

  const auto whole = static_cast<std::int64_t>(scaled / scale);
  std::string out = (negative && scaled != 0 ? "-" : "") + std::to_string(whole);
  if (digits > 0) {
    std::string frac = std::to_string(static_cast<std::int64_t>(scaled % scale));
    frac.insert(0, static_cast<std::size_t>(digits) - frac.size(), '0');
    out += "." + frac;
    if (trim) {
      while (out.back() == '0') out.pop_back();
      if (out.back() == '.') out.pop_back();
    }
  }
  return out;
}

double to_double(const Rational& value) {
  return boost::rational_cast<double>(value);
}

std::int64_t round_half_up(const Rational& value) {
  const Int128 num = value.numerator();
  const Int128 den = value.denominator();
  Int128 twice = 2 * num + den;
  Int128 q = twice / (2 * den);
  if (twice % (2 * den) != 0 && twice < 0) --q;
  return static_cast<std::int64_t>(q);
}

std::int64_t ceil(const Rational& value) {
  const std::int64_t num = value.numerator();
  const std::int64_t den = value.denominator();
  std::int64_t q = num / den;
  if (num % den != 0 && num > 0) ++q;
  return q;
}

}  // namespace hybridtext
