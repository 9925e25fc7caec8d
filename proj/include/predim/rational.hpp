// Copyright 2026 The predim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace predim {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Accepts "p/q", integers and finite decimals ("0.7071", "-3/4").
// Throws InvalidArgument on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

// Canonical text form: "p/q" in lowest terms, or "n" for integers.
std::string to_string(const Rational& value);

// Least common multiple of the denominators, as an int64. Throws
// InvalidArgument if it does not fit.
std::int64_t common_denominator(std::initializer_list<Rational> values);

// value * scale as an int64; value * scale must be integral.
std::int64_t scaled_integer(const Rational& value, std::int64_t scale);

}  // namespace predim
