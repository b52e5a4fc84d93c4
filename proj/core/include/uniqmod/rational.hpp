#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>
#include <type_traits>

namespace uniqmod {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Parses "7", "-3/4", "0.125" or "1e-3" into an exact rational.
/// Decimal notation is converted exactly (0.1 is 1/10, not the nearest double).
Rational parse_rational(std::string_view text);

/// "num/den", or just "num" when the denominator is 1.
std::string to_string(const Rational& value);
std::string to_string(const BigInt& value);

double to_double(const Rational& value);
double to_double(const BigInt& value);

template <class T>
inline constexpr bool is_exact_v = std::is_same_v<T, Rational>;

template <class T>
concept Scalar = std::is_same_v<T, double> || std::is_same_v<T, Rational>;

template <Scalar T>
T abs_value(const T& x) {
  return x < T(0) ? T(-x) : x;
}

template <Scalar T>
T int_power(const T& base, int exponent) {
  T result(1);
  T b = base;
  for (unsigned e = static_cast<unsigned>(exponent); e != 0; e >>= 1) {
    if (e & 1u) result *= b;
    if (e > 1u) b *= b;
  }
  return result;
}

}  // namespace uniqmod
