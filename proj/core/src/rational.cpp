#include "uniqmod/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace uniqmod {

namespace {

BigInt parse_integer(std::string_view digits, std::string_view whole) {
  if (digits.empty()) throw std::invalid_argument("malformed number: '" + std::string(whole) + "'");
  BigInt value = 0;
  for (char ch : digits) {
    if (!std::isdigit(static_cast<unsigned char>(ch)))
      throw std::invalid_argument("malformed number: '" + std::string(whole) + "'");
    value = value * 10 + (ch - '0');
  }
  return value;
}

BigInt pow10(long exponent) {
  BigInt value = 1;
  for (long i = 0; i < exponent; ++i) value *= 10;
  return value;
}

Rational parse_decimal(std::string_view text, std::string_view whole) {
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }

  long exponent = 0;
  if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view exp_text = text.substr(e + 1);
    bool exp_negative = false;
    if (!exp_text.empty() && (exp_text.front() == '-' || exp_text.front() == '+')) {
      exp_negative = exp_text.front() == '-';
      exp_text.remove_prefix(1);
    }
    BigInt magnitude = parse_integer(exp_text, whole);
    if (magnitude > 4000) throw std::invalid_argument("exponent out of range: '" + std::string(whole) + "'");
    exponent = magnitude.convert_to<long>();
    if (exp_negative) exponent = -exponent;
    text = text.substr(0, e);
  }

  std::string_view int_part = text;
  std::string_view frac_part;
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    int_part = text.substr(0, dot);
    frac_part = text.substr(dot + 1);
  }
  if (int_part.empty() && frac_part.empty())
    throw std::invalid_argument("malformed number: '" + std::string(whole) + "'");

  BigInt mantissa = int_part.empty() ? BigInt(0) : parse_integer(int_part, whole);
  if (!frac_part.empty()) {
    mantissa = mantissa * pow10(static_cast<long>(frac_part.size())) + parse_integer(frac_part, whole);
    exponent -= static_cast<long>(frac_part.size());
  }

  Rational value = exponent >= 0 ? Rational(mantissa * pow10(exponent))
                                 : Rational(mantissa, pow10(-exponent));
  return negative ? Rational(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view whole = text;
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw std::invalid_argument("empty number");

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    Rational num = parse_decimal(text.substr(0, slash), whole);
    Rational den = parse_decimal(text.substr(slash + 1), whole);
    if (den == 0) throw std::invalid_argument("zero denominator: '" + std::string(whole) + "'");
    return num / den;
  }
  return parse_decimal(text, whole);
}

std::string to_string(const Rational& value) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  if (denominator(value) == 1) return numerator(value).str();
  return numerator(value).str() + "/" + denominator(value).str();
}

std::string to_string(const BigInt& value) { return value.str(); }

double to_double(const Rational& value) { return value.convert_to<double>(); }

double to_double(const BigInt& value) { return value.convert_to<double>(); }

}  // namespace uniqmod
