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

#ifndef COMMITTEE_RATIONAL_HPP_
#define COMMITTEE_RATIONAL_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace committee {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Parses "p", "-p" or "p/q". Throws ParseError on malformed input or
// a zero denominator.
Rational parse_rational(std::string_view text);

// Parses a comma-separated list of rationals, e.g. "0,1,1/2".
std::vector<Rational> parse_rational_list(std::string_view text);

// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string format_rational(const Rational& value);

// Fixed-point decimal rendering, display only.
std::string format_decimal(const Rational& value, int digits = 6);

// Least common multiple of the denominators of `values` (1 when empty).
BigInt common_denominator(const std::vector<Rational>& values);

// Floor of a rational as a big integer.
BigInt floor_of(const Rational& value);

// Narrowing with overflow check; throws CapExceeded when out of range.
std::int64_t to_int64(const BigInt& value);

// value * scale as a 64-bit integer; throws PreconditionError when the
// product is not integral.
std::int64_t scaled_int64(const Rational& value, const BigInt& scale);

}  // namespace committee

#endif  // COMMITTEE_RATIONAL_HPP_
