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

#include <cstdint>
#include <string>
#include <vector>

#include "predim/errors.hpp"
#include "predim/rational.hpp"

namespace predim {

enum class Ordering { LT, EQ, GT };

const char* to_string(Ordering o);

// The parameter alpha: an exact rational in (0, 1], or a declared-irrational
// value known only to lie in the open interval (lo, hi) with 0 < lo < hi < 1.
class AlphaSpec {
 public:
  static AlphaSpec exact(Rational value);
  static AlphaSpec interval(Rational lo, Rational hi);
  static AlphaSpec parse(const std::string& text);

  bool is_exact() const { return exact_; }
  // Exact value; throws InvalidArgument in interval mode.
  const Rational& value() const;
  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }

  // "p/q" or "(lo, hi)".
  std::string describe() const;

 private:
  AlphaSpec() = default;
  bool exact_ = true;
  Rational lo_, hi_;
};

// The affine value p - q*alpha.
struct DimValue {
  Rational p = 0;
  Rational q = 0;

  DimValue() = default;
  DimValue(Rational p_, Rational q_) : p(std::move(p_)), q(std::move(q_)) {}
  static DimValue constant(Rational c) { return {std::move(c), 0}; }

  DimValue operator+(const DimValue& o) const { return {p + o.p, q + o.q}; }
  DimValue operator-(const DimValue& o) const { return {p - o.p, q - o.q}; }
  DimValue operator-() const { return {-p, -q}; }
  DimValue operator*(const Rational& k) const { return {p * k, q * k}; }
  bool operator==(const DimValue&) const = default;

  // Exact value at a rational alpha.
  Rational at(const Rational& alpha) const { return p - q * alpha; }
  std::string describe() const;
};

// Exact comparison of x and y at alpha. In interval mode the sign must be
// constant on (lo, hi), else InsufficientPrecision.
Ordering cmp(const DimValue& x, const DimValue& y, const AlphaSpec& alpha);
int sign(const DimValue& x, const AlphaSpec& alpha);

inline bool lt(const DimValue& x, const DimValue& y, const AlphaSpec& a) {
  return cmp(x, y, a) == Ordering::LT;
}
inline bool le(const DimValue& x, const DimValue& y, const AlphaSpec& a) {
  return cmp(x, y, a) != Ordering::GT;
}

// Relative dimension change of n added elements and e added (weighted)
// instances: beta*n - alpha*e. Used on the hot paths in place of DimValue.
struct Affine {
  std::int64_t n = 0;
  std::int64_t e = 0;

  Affine operator+(const Affine& o) const { return {n + o.n, e + o.e}; }
  Affine operator-(const Affine& o) const { return {n - o.n, e - o.e}; }
  bool operator==(const Affine&) const = default;
};

// Integer evaluation of Affine values. All denominators of alpha (or of
// the interval endpoints) and of beta are cleared by a common scale D.
//
// In interval mode a value is evaluated at two points, lo + eps and hi - eps,
// as a pair (value at the endpoint, first-order coefficient of eps); a
// comparison is decided only when both points agree.
class Weights {
 public:
  struct Point {
    std::int64_t alpha = 0;  // alpha endpoint * D
    int slope = 0;           // +1 for lo + eps, -1 for hi - eps, 0 exact
  };
  struct Key {
    std::int64_t value = 0;
    std::int64_t eps = 0;
    auto operator<=>(const Key&) const = default;
    Key operator+(const Key& o) const { return {value + o.value, eps + o.eps}; }
    Key operator-(const Key& o) const { return {value - o.value, eps - o.eps}; }
  };

  Weights(const AlphaSpec& alpha, const Rational& beta);

  const AlphaSpec& alpha() const { return alpha_; }
  const Rational& beta() const { return beta_; }
  bool exact() const { return alpha_.is_exact(); }
  std::int64_t scale() const { return scale_; }
  std::int64_t beta_scaled() const { return beta_scaled_; }
  const std::vector<Point>& points() const { return points_; }

  Key key(const Affine& a, const Point& p) const {
    return {beta_scaled_ * a.n - p.alpha * a.e, -p.slope * a.e};
  }
  // Key of a single element (beta) and of a single instance (alpha) at p.
  Key element_key(const Point&) const { return {beta_scaled_, 0}; }
  Key instance_key(const Point& p) const { return {p.alpha, p.slope}; }

  int sign(const Affine& a) const;
  Ordering compare(const Affine& x, const Affine& y) const;
  DimValue to_dim(const Affine& a) const;

 private:
  AlphaSpec alpha_;
  Rational beta_;
  std::int64_t scale_ = 1;
  std::int64_t beta_scaled_ = 1;
  std::vector<Point> points_;
};

}  // namespace predim
