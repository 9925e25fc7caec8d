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

#include "predim/alpha.hpp"

namespace predim {

const char* to_string(Ordering o) {
  switch (o) {
    case Ordering::LT: return "LT";
    case Ordering::EQ: return "EQ";
    case Ordering::GT: return "GT";
  }
  return "?";
}

AlphaSpec AlphaSpec::exact(Rational value) {
  if (value <= 0 || value > 1) {
    throw AlphaOutOfRange("alpha " + to_string(value) + " outside (0, 1]");
  }
  AlphaSpec a;
  a.exact_ = true;
  a.lo_ = value;
  a.hi_ = value;
  return a;
}

AlphaSpec AlphaSpec::interval(Rational lo, Rational hi) {
  if (lo <= 0 || hi >= 1 || lo >= hi) {
    throw AlphaOutOfRange("alpha interval (" + to_string(lo) + ", " + to_string(hi) +
                          ") must satisfy 0 < lo < hi < 1");
  }
  AlphaSpec a;
  a.exact_ = false;
  a.lo_ = std::move(lo);
  a.hi_ = std::move(hi);
  return a;
}

AlphaSpec AlphaSpec::parse(const std::string& text) { return exact(parse_rational(text)); }

const Rational& AlphaSpec::value() const {
  if (!exact_) throw InvalidArgument("alpha is declared irrational; no exact value");
  return lo_;
}

std::string AlphaSpec::describe() const {
  if (exact_) return to_string(lo_);
  return "(" + to_string(lo_) + ", " + to_string(hi_) + ")";
}

std::string DimValue::describe() const {
  if (q == 0) return to_string(p);
  std::string out = p == 0 ? "" : to_string(p) + " ";
  Rational mag = q < 0 ? Rational(-q) : q;
  out += q < 0 ? (p == 0 ? "" : "+ ") : (p == 0 ? "-" : "- ");
  if (mag != 1) out += to_string(mag) + "*";
  return out + "alpha";
}

int sign(const DimValue& x, const AlphaSpec& alpha) {
  if (alpha.is_exact()) {
    Rational v = x.at(alpha.value());
    return v < 0 ? -1 : (v > 0 ? 1 : 0);
  }
  if (x.q == 0) return x.p < 0 ? -1 : (x.p > 0 ? 1 : 0);
  // Linear in alpha with nonzero slope: constant sign on the open interval
  // iff the root lies outside it.
  Rational root = x.p / x.q;
  if (root <= alpha.lo() || root >= alpha.hi()) {
    Rational mid = (alpha.lo() + alpha.hi()) / 2;
    return x.at(mid) < 0 ? -1 : 1;
  }
  throw InsufficientPrecision("sign of " + x.describe() + " changes inside alpha interval " +
                              alpha.describe() + " at " + to_string(root));
}

Ordering cmp(const DimValue& x, const DimValue& y, const AlphaSpec& alpha) {
  int s = sign(x - y, alpha);
  return s < 0 ? Ordering::LT : (s > 0 ? Ordering::GT : Ordering::EQ);
}

Weights::Weights(const AlphaSpec& alpha, const Rational& beta) : alpha_(alpha), beta_(beta) {
  if (beta <= 0) throw InvalidArgument("beta must be positive");
  if (alpha.is_exact()) {
    scale_ = common_denominator({alpha.value(), beta});
  } else {
    scale_ = common_denominator({alpha.lo(), alpha.hi(), beta});
  }
  if (scale_ > (std::int64_t{1} << 40)) {
    throw InvalidArgument("denominators of alpha and beta too large for the integer kernels");
  }
  beta_scaled_ = scaled_integer(beta, scale_);
  if (alpha.is_exact()) {
    points_.push_back({scaled_integer(alpha.value(), scale_), 0});
  } else {
    points_.push_back({scaled_integer(alpha.lo(), scale_), 1});
    points_.push_back({scaled_integer(alpha.hi(), scale_), -1});
  }
}

int Weights::sign(const Affine& a) const {
  int result = 0;
  bool first = true;
  for (const Point& p : points_) {
    __int128 v = static_cast<__int128>(beta_scaled_) * a.n - static_cast<__int128>(p.alpha) * a.e;
    __int128 d = -static_cast<__int128>(p.slope) * a.e;
    int s = v < 0 ? -1 : (v > 0 ? 1 : (d < 0 ? -1 : (d > 0 ? 1 : 0)));
    if (first) {
      result = s;
      first = false;
    } else if (s != result) {
      throw InsufficientPrecision("sign of " + to_dim(a).describe() +
                                  " changes inside alpha interval " + alpha_.describe());
    }
  }
  return result;
}

Ordering Weights::compare(const Affine& x, const Affine& y) const {
  int s = sign(x - y);
  return s < 0 ? Ordering::LT : (s > 0 ? Ordering::GT : Ordering::EQ);
}

DimValue Weights::to_dim(const Affine& a) const { return {beta_ * a.n, Rational(a.e)}; }

}  // namespace predim
