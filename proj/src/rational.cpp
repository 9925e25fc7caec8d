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

#include "predim/rational.hpp"

#include <cctype>
#include <limits>

#include "predim/errors.hpp"

namespace predim {
namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

BigInt parse_integer(std::string_view s, std::string_view whole) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) {
    throw InvalidArgument("malformed rational '" + std::string(whole) + "'");
  }
  BigInt value{std::string(s)};
  return negative ? BigInt(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
    text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
    text.remove_suffix(1);
  if (text.empty()) throw InvalidArgument("empty rational");

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    BigInt num = parse_integer(text.substr(0, slash), text);
    std::string_view den_text = text.substr(slash + 1);
    if (!all_digits(den_text)) {
      throw InvalidArgument("malformed rational '" + std::string(text) + "'");
    }
    BigInt den(std::string{den_text});
    if (den == 0) throw InvalidArgument("zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
  }

  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    bool negative = !int_part.empty() && int_part.front() == '-';
    if (!int_part.empty() && (int_part.front() == '-' || int_part.front() == '+'))
      int_part.remove_prefix(1);
    if ((!int_part.empty() && !all_digits(int_part)) || !all_digits(frac)) {
      throw InvalidArgument("malformed decimal '" + std::string(text) + "'");
    }
    BigInt scale = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(frac.size()));
    BigInt whole = int_part.empty() ? BigInt(0) : BigInt(std::string(int_part));
    BigInt num = whole * scale + BigInt(std::string(frac));
    if (negative) num = -num;
    return Rational(num, scale);
  }

  return Rational(parse_integer(text, text));
}

std::string to_string(const Rational& value) {
  const BigInt num = boost::multiprecision::numerator(value);
  const BigInt den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::int64_t common_denominator(std::initializer_list<Rational> values) {
  BigInt lcm = 1;
  for (const Rational& v : values) {
    lcm = boost::multiprecision::lcm(lcm, BigInt(boost::multiprecision::denominator(v)));
  }
  if (lcm > std::numeric_limits<std::int64_t>::max() / 4) {
    throw InvalidArgument("denominators too large for exact fast path");
  }
  return static_cast<std::int64_t>(lcm);
}

std::int64_t scaled_integer(const Rational& value, std::int64_t scale) {
  Rational scaled = value * scale;
  if (boost::multiprecision::denominator(scaled) != 1) {
    throw InvalidArgument("value " + to_string(value) + " not integral at scale " +
                          std::to_string(scale));
  }
  BigInt n = boost::multiprecision::numerator(scaled);
  if (n > std::numeric_limits<std::int64_t>::max() / 4 ||
      n < -(std::numeric_limits<std::int64_t>::max() / 4)) {
    throw InvalidArgument("scaled value out of range");
  }
  return static_cast<std::int64_t>(n);
}

}  // namespace predim
