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

#include "predim/hypergraph.hpp"

#include <map>

namespace predim {

Hypergraph::Hypergraph(const Structure& s) : ids_(s.elements()) {
  for (int i = 0; i < size(); ++i) index_[ids_[i]] = i;
  std::map<std::vector<int>, int> merged;
  for (std::size_t r = 0; r < s.signature().size(); ++r) {
    for (const Instance& inst : s.instances(r)) {
      std::vector<int> m;
      m.reserve(inst.size());
      for (ElementId id : inst) m.push_back(index_.at(id));
      ++merged[m];
    }
  }
  incident_.resize(ids_.size());
  for (auto& [members, mult] : merged) {
    for (int v : members) incident_[v].push_back(static_cast<int>(edges_.size()));
    edges_.push_back({members, mult});
  }
}

int Hypergraph::index(ElementId id) const {
  auto it = index_.find(id);
  if (it == index_.end()) throw UnknownElement("unknown element " + std::to_string(id));
  return it->second;
}

std::vector<char> Hypergraph::mask(const ElementSet& s) const {
  std::vector<char> m(ids_.size(), 0);
  for (ElementId id : s) m[index(id)] = 1;
  return m;
}

ElementSet Hypergraph::ids(const std::vector<char>& mask) const {
  ElementSet out;
  for (int i = 0; i < size(); ++i) {
    if (mask[i]) out.push_back(ids_[i]);
  }
  return out;
}

std::int64_t Hypergraph::edges_within(const std::vector<char>& mask) const {
  std::int64_t total = 0;
  for (const Edge& e : edges_) {
    bool inside = true;
    for (int v : e.members) inside = inside && mask[v];
    if (inside) total += e.mult;
  }
  return total;
}

}  // namespace predim
