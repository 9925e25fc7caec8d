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
#include <unordered_map>
#include <vector>

#include "predim/structure.hpp"

namespace predim {

// Dense view of a structure for the subset-minimization kernels: elements
// are renumbered 0..n-1 and instances with the same element set (under
// different symbols) are merged into one edge carrying a multiplicity.
class Hypergraph {
 public:
  struct Edge {
    std::vector<int> members;  // sorted dense indices
    int mult = 1;
  };

  explicit Hypergraph(const Structure& s);

  int size() const { return static_cast<int>(ids_.size()); }
  ElementId id(int i) const { return ids_[i]; }
  int index(ElementId id) const;
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<int>& incident(int v) const { return incident_[v]; }

  // Dense indicator vector of an element set.
  std::vector<char> mask(const ElementSet& s) const;
  ElementSet ids(const std::vector<char>& mask) const;
  // Weighted number of edges inside the mask.
  std::int64_t edges_within(const std::vector<char>& mask) const;

 private:
  std::vector<ElementId> ids_;
  std::unordered_map<ElementId, int> index_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> incident_;
};

}  // namespace predim
