#include "qorbit/scalar.hpp"

#include <cctype>
#include <cmath>
#include <string>

#include "qorbit/errors.hpp"

namespace qorbit {

namespace {

using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

// Digits only; GMP would read a leading 0 as an octal prefix.
Integer decimal_integer(std::string_view digits) {
  const auto first = digits.find_first_not_of('0');
  return first == std::string_view::npos ? Integer(0) : Integer(std::string(digits.substr(first)));
}

Integer parse_integer(std::string_view s, std::string_view whole) {
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) throw ParseError("not a rational number: '" + std::string(whole) + "'");
  const Integer value = decimal_integer(s);
  return negative ? Integer(-value) : value;
}

Integer power_of_ten(long exponent) {
  Integer result = 1;
  for (long i = 0; i < exponent; ++i) result *= 10;
  return result;
}

Rational parse_decimal(std::string_view s, std::string_view whole) {
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view exp_text = s.substr(e + 1);
    s = s.substr(0, e);
    std::string_view digits = exp_text;
    if (!digits.empty() && (digits.front() == '+' || digits.front() == '-')) digits.remove_prefix(1);
    if (!all_digits(digits) || digits.size() > 6) {
      throw ParseError("bad exponent in '" + std::string(whole) + "'");
    }
    exponent = std::stol(std::string(exp_text));
  }
  std::string mantissa;
  long fraction_digits = 0;
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = s.substr(0, dot);
    std::string_view frac_part = s.substr(dot + 1);
    if ((int_part.empty() && frac_part.empty()) || (!int_part.empty() && !all_digits(int_part)) ||
        (!frac_part.empty() && !all_digits(frac_part))) {
      throw ParseError("not a decimal number: '" + std::string(whole) + "'");
    }
    mantissa = std::string(int_part) + std::string(frac_part);
    fraction_digits = static_cast<long>(frac_part.size());
  } else {
    if (!all_digits(s)) throw ParseError("not a decimal number: '" + std::string(whole) + "'");
    mantissa = std::string(s);
  }
  Integer numerator = decimal_integer(mantissa);
  if (negative) numerator = -numerator;
  const long shift = exponent - fraction_digits;
  if (shift >= 0) return Rational(numerator * power_of_ten(shift));
  return Rational(numerator, power_of_ten(-shift));
}

}  // namespace

std::string_view to_string(Mode mode) { return mode == Mode::Exact ? "exact" : "float"; }

Mode parse_mode(std::string_view text) {
  if (text == "exact") return Mode::Exact;
  if (text == "float") return Mode::Float;
  throw ParseError("mode must be 'exact' or 'float', got '" + std::string(text) + "'");
}

std::string to_string(const Rational& x) {
  const Integer num = boost::multiprecision::numerator(x);
  const Integer den = boost::multiprecision::denominator(x);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rational parse_rational(std::string_view text) {
  const std::string_view s = trim(text);
  if (s.empty()) throw ParseError("empty number");
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    const Integer num = parse_integer(trim(s.substr(0, slash)), text);
    std::string_view den_text = trim(s.substr(slash + 1));
    if (!den_text.empty() && den_text.front() == '+') den_text.remove_prefix(1);
    const Integer den = parse_integer(den_text, text);
    if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
  }
  if (s.find_first_of(".eE") != std::string_view::npos) return parse_decimal(s, text);
  return Rational(parse_integer(s, text));
}

Rational rational_from_double(double x) {
  if (!std::isfinite(x)) throw InvalidInput("non-finite value has no rational expansion");
  return Rational(x);
}

}  // namespace qorbit
