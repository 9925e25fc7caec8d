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

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "predim/closure.hpp"

namespace predim {

// A strong pair A <= B of graphs; A is {0, .., a_size - 1} inside B.
struct ExtensionType {
  Structure b;
  int a_size = 0;

  ElementSet a() const;
};

// Strong pairs with |B| <= max_size and A != B, one per isomorphism class
// over A (pointwise), ordered by (|A|, |B|, edge mask).
std::vector<ExtensionType> extension_catalog(int max_size, const AlphaSpec& alpha,
                                             const Rational& beta = 1);

// Pairs with B intrinsic over A, A nonempty, |B| <= max_size.
std::vector<ExtensionType> intrinsic_catalog(int max_size, const AlphaSpec& alpha,
                                             const Rational& beta = 1);

struct Obligation {
  std::size_t type = 0;              // index into the catalog
  std::vector<ElementId> image;      // image of 0, .., a_size - 1
};

struct CompletedTask {
  Obligation obligation;
  std::vector<ElementId> copy;  // image of 0, .., |B| - 1
};

class GenericApprox {
 public:
  GenericApprox(AlphaSpec alpha, Rational beta, int max_ext, std::uint64_t seed);

  // Discharges up to `steps` obligations; returns how many were discharged.
  std::size_t run(std::size_t steps);

  const Structure& structure() const { return m_; }
  std::size_t stage() const { return completed_.size(); }
  const std::vector<ExtensionType>& catalog() const { return catalog_; }
  const std::vector<CompletedTask>& completed() const { return completed_; }
  // |M| after each stage, starting with 0.
  const std::vector<std::size_t>& stage_sizes() const { return stage_sizes_; }
  const AlphaSpec& alpha() const { return alpha_; }
  const Rational& beta() const { return beta_; }
  int max_ext() const { return max_ext_; }
  std::uint64_t seed() const { return seed_; }
  bool exhausted() const { return exhausted_; }

  // The next `limit` obligations after the cursor, without consuming them.
  std::vector<Obligation> peek(std::size_t limit);

 private:
  bool next(Obligation* out);
  bool refill();

  AlphaSpec alpha_;
  Rational beta_;
  int max_ext_;
  std::uint64_t seed_;
  std::vector<ExtensionType> catalog_;
  Structure m_;
  std::vector<CompletedTask> completed_;
  std::vector<std::size_t> stage_sizes_{0};
  std::vector<Obligation> level_;  // obligations of the current level
  std::size_t cursor_ = 0;
  long level_index_ = -1;  // max element of the images; -1 for A empty
  bool started_ = false;
  bool exhausted_ = false;
};

GenericApprox build_generic(const AlphaSpec& alpha, const Rational& beta, std::size_t steps,
                            int max_ext, std::uint64_t seed);

struct ExtensionAudit {
  std::size_t scheduled = 0;
  std::size_t scheduled_ok = 0;
  std::size_t unscheduled = 0;     // obligations past the cursor that were checked
  std::size_t unscheduled_ok = 0;  // of those, already realized by a strong copy
  bool empty_strong = false;       // the empty set is strong in M
  std::vector<std::string> failures;

  bool ok() const { return scheduled_ok == scheduled && empty_strong; }
};

ExtensionAudit audit_extension(GenericApprox& g, std::size_t unscheduled_limit = 20,
                               const MinimizeOptions& options = {});

struct ClosureAudit {
  std::size_t stages_checked = 0;
  std::size_t stages_ok = 0;
  std::size_t samples = 0;
  std::size_t closures_ok = 0;
  std::vector<std::string> failures;

  bool ok() const { return stages_ok == stages_checked && closures_ok == samples; }
};

ClosureAudit audit_finite_closures(const GenericApprox& g, std::size_t samples,
                                   std::uint64_t seed, const MinimizeOptions& options = {});

struct ChiPoint {
  std::size_t type = 0;   // index into intrinsic_catalog
  std::size_t stage = 0;
  std::size_t images = 0;  // images of A inspected
  std::size_t max_chi = 0;
};

// Largest number of copies of B over an image of A, at evenly spaced stages.
std::vector<ChiPoint> chi_growth(const GenericApprox& g, std::size_t checkpoints,
                                 std::size_t max_images = 30);

nlohmann::json to_json(const GenericApprox& g);

}  // namespace predim
