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
#include <limits>
#include <stdexcept>
#include <string>

namespace predim {

// Base class for every error raised by the library. The CLI maps the
// concrete subclasses onto exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define PREDIM_DEFINE_ERROR(Name)          \
  class Name : public Error {              \
   public:                                 \
    using Error::Error;                    \
  }

PREDIM_DEFINE_ERROR(InvalidArgument);
PREDIM_DEFINE_ERROR(UnknownElement);
PREDIM_DEFINE_ERROR(BaseMismatch);
PREDIM_DEFINE_ERROR(OverlapViolation);
PREDIM_DEFINE_ERROR(SetsNotDisjoint);
// A comparison against a declared-irrational alpha could not be resolved
// on the given interval; the caller must narrow it.
PREDIM_DEFINE_ERROR(InsufficientPrecision);
PREDIM_DEFINE_ERROR(BudgetExceeded);
PREDIM_DEFINE_ERROR(NotStrong);
PREDIM_DEFINE_ERROR(AlphaOutOfRange);
PREDIM_DEFINE_ERROR(XRangeViolation);
PREDIM_DEFINE_ERROR(Unachievable);
PREDIM_DEFINE_ERROR(ProbabilityOverflow);

#undef PREDIM_DEFINE_ERROR

// Work counter shared by the exponential searches. Exceeding the limit
// raises BudgetExceeded.
class Budget {
 public:
  static constexpr std::uint64_t kUnlimited =
      std::numeric_limits<std::uint64_t>::max();

  explicit Budget(std::uint64_t limit = kUnlimited) : limit_(limit) {}

  void charge(std::uint64_t units = 1) {
    used_ += units;
    if (used_ > limit_) {
      throw BudgetExceeded("node budget of " + std::to_string(limit_) +
                           " exhausted");
    }
  }
  std::uint64_t used() const { return used_; }
  std::uint64_t limit() const { return limit_; }

 private:
  std::uint64_t limit_;
  std::uint64_t used_ = 0;
};

}  // namespace predim
