// Copyright 2026 The OAX Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "oax/errors.hpp"

namespace oax {

/// Exact arbitrary-precision rational. All right operands, interval
/// endpoints and context values use it; binary floating point never
/// enters evaluation.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

/// Parses a decimal literal such as `600`, `-12.5`, `.25` or `1.5e3`.
/// Returns nullopt on anything else (including surrounding whitespace).
inline std::optional<Rational> try_parse_decimal(std::string_view text) {
  std::size_t i = 0;
  const std::size_t n = text.size();
  bool negative = false;
  if (i < n && (text[i] == '+' || text[i] == '-')) {
    negative = text[i] == '-';
    ++i;
  }
  std::string digits;
  std::size_t fraction_digits = 0;
  bool any_digit = false;
  while (i < n && text[i] >= '0' && text[i] <= '9') {
    digits += text[i++];
    any_digit = true;
  }
  if (i < n && text[i] == '.') {
    ++i;
    while (i < n && text[i] >= '0' && text[i] <= '9') {
      digits += text[i++];
      ++fraction_digits;
      any_digit = true;
    }
  }
  if (!any_digit) return std::nullopt;
  long exponent = 0;
  if (i < n && (text[i] == 'e' || text[i] == 'E')) {
    ++i;
    bool exp_negative = false;
    if (i < n && (text[i] == '+' || text[i] == '-')) {
      exp_negative = text[i] == '-';
      ++i;
    }
    if (i >= n) return std::nullopt;
    std::string exp_digits;
    while (i < n && text[i] >= '0' && text[i] <= '9') exp_digits += text[i++];
    if (exp_digits.empty() || exp_digits.size() > 6) return std::nullopt;
    exponent = std::stol(exp_digits);
    if (exp_negative) exponent = -exponent;
  }
  if (i != n) return std::nullopt;

  // cpp_int reads a leading 0 as an octal prefix.
  auto first = digits.find_first_not_of('0');
  Integer mantissa(first == std::string::npos ? std::string("0") : digits.substr(first));
  if (negative) mantissa = -mantissa;
  long scale = exponent - static_cast<long>(fraction_digits);
  Rational value(mantissa);
  if (scale > 0) {
    value *= Rational(boost::multiprecision::pow(Integer(10), static_cast<unsigned>(scale)));
  } else if (scale < 0) {
    value /= Rational(boost::multiprecision::pow(Integer(10), static_cast<unsigned>(-scale)));
  }
  return value;
}

inline Rational parse_decimal(std::string_view text) {
  if (auto v = try_parse_decimal(text)) return *v;
  throw domain_error("not a decimal literal: '" + std::string(text) + "'");
}

inline bool is_integral(const Rational& r) {
  return boost::multiprecision::denominator(r) == 1;
}

inline Rational floor_of(const Rational& r) {
  const Integer& num = boost::multiprecision::numerator(r);
  const Integer& den = boost::multiprecision::denominator(r);
  Integer q = num / den;  // truncates toward zero
  if (num < 0 && q * den != num) q -= 1;
  return Rational(q);
}

inline Rational ceil_of(const Rational& r) {
  return -floor_of(-r);
}

/// Exact rendering: terminating fractions print as plain decimals
/// (`12.5`, `-0.125`), anything else as `p/q`.
inline std::string to_decimal_string(const Rational& r) {
  Integer num = boost::multiprecision::numerator(r);
  Integer den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();

  Integer rest = den;
  unsigned twos = 0, fives = 0;
  while (rest % 2 == 0) { rest /= 2; ++twos; }
  while (rest % 5 == 0) { rest /= 5; ++fives; }
  if (rest != 1) return num.str() + "/" + den.str();

  unsigned places = twos > fives ? twos : fives;
  Integer scaled = num * boost::multiprecision::pow(Integer(10), places) / den;
  bool negative = scaled < 0;
  if (negative) scaled = -scaled;
  std::string digits = scaled.str();
  if (digits.size() <= places) digits.insert(0, places - digits.size() + 1, '0');
  digits.insert(digits.size() - places, ".");
  return negative ? "-" + digits : digits;
}

}  // namespace oax
