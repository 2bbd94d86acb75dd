// Copyright 2026 The committee-rules Authors
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

#include "committee/rational.hpp"

#include <cctype>
#include <limits>
#include <sstream>

#include "committee/errors.hpp"

namespace committee {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

BigInt parse_integer(std::string_view s, std::string_view whole) {
  s = trim(s);
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (s.empty()) {
    throw ParseError(0, "malformed rational '" + std::string(whole) + "'");
  }
  BigInt value = 0;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) {
      throw ParseError(0, "malformed rational '" + std::string(whole) +
                              "'");
    }
    value = value * 10 + (ch - '0');
  }
  return negative ? BigInt(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view s = trim(text);
  const auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(s, text));
  const BigInt num = parse_integer(s.substr(0, slash), text);
  const BigInt den = parse_integer(s.substr(slash + 1), text);
  if (den == 0) {
    throw ParseError(0, "zero denominator in '" + std::string(text) + "'");
  }
  return Rational(num, den);
}

std::vector<Rational> parse_rational_list(std::string_view text) {
  std::vector<Rational> out;
  std::size_t start = 0;
  for (;;) {
    const auto comma = text.find(',', start);
    out.push_back(parse_rational(text.substr(
        start,
        comma == std::string_view::npos ? std::string_view::npos
                                        : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string format_rational(const Rational& value) {
  const BigInt num = boost::multiprecision::numerator(value);
  const BigInt den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::string format_decimal(const Rational& value, int digits) {
  BigInt scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  const Rational scaled = value * scale;
  // Round half away from zero.
  BigInt rounded = floor_of(scaled + Rational(1, 2));
  const bool negative = rounded < 0;
  if (negative) rounded = -rounded;
  std::string digits_str = rounded.str();
  if (digits > 0) {
    while (static_cast<int>(digits_str.size()) <= digits) {
      digits_str.insert(digits_str.begin(), '0');
    }
    digits_str.insert(digits_str.end() - digits, '.');
  }
  return (negative ? "-" : "") + digits_str;
}

BigInt common_denominator(const std::vector<Rational>& values) {
  BigInt lcm = 1;
  for (const auto& v : values) {
    const BigInt den = boost::multiprecision::denominator(v);
    lcm = lcm / boost::multiprecision::gcd(lcm, den) * den;
  }
  return lcm;
}

BigInt floor_of(const Rational& value) {
  const BigInt num = boost::multiprecision::numerator(value);
  const BigInt den = boost::multiprecision::denominator(value);
  BigInt q = num / den;  // truncates toward zero
  if (num < 0 && q * den != num) q -= 1;
  return q;
}

std::int64_t to_int64(const BigInt& value) {
  if (value > std::numeric_limits<std::int64_t>::max() ||
      value < std::numeric_limits<std::int64_t>::min()) {
    throw CapExceeded("value " + value.str() + " does not fit in 64 bits");
  }
  return value.convert_to<std::int64_t>();
}

std::int64_t scaled_int64(const Rational& value, const BigInt& scale) {
  const Rational product = value * scale;
  if (boost::multiprecision::denominator(product) != 1) {
    throw PreconditionError("scaled value " + format_rational(product) +
                            " is not an integer");
  }
  return to_int64(boost::multiprecision::numerator(product));
}

}  // namespace committee
