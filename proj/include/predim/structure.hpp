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
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "predim/errors.hpp"

namespace predim {

using ElementId = std::uint32_t;

// Sorted, duplicate-free list of element ids.
using ElementSet = std::vector<ElementId>;

// A relation instance, stored as the sorted set of its elements. Relations
// are symmetric and hold only of distinct elements, so the set carries all
// the information of the tuple.
using Instance = std::vector<ElementId>;

ElementSet make_set(std::vector<ElementId> ids);
ElementSet set_union(const ElementSet& a, const ElementSet& b);
ElementSet set_intersection(const ElementSet& a, const ElementSet& b);
ElementSet set_difference(const ElementSet& a, const ElementSet& b);
bool is_subset(const ElementSet& a, const ElementSet& b);
bool contains(const ElementSet& s, ElementId id);

struct RelationSymbol {
  std::string name;
  int arity = 2;

  bool operator==(const RelationSymbol&) const = default;
};

class Signature {
 public:
  Signature() = default;

  // A single binary symbol "E".
  static Signature graph();

  // Returns the index of the new symbol. Throws InvalidArgument on a
  // duplicate name or an arity below 2.
  std::size_t add(std::string name, int arity);

  std::size_t size() const { return symbols_.size(); }
  const RelationSymbol& symbol(std::size_t i) const { return symbols_.at(i); }
  const std::vector<RelationSymbol>& symbols() const { return symbols_; }
  std::optional<std::size_t> find(std::string_view name) const;
  std::size_t index_of(std::string_view name) const;

  bool is_graph() const;
  bool all_binary() const;

  bool operator==(const Signature&) const = default;

 private:
  std::vector<RelationSymbol> symbols_;
};

class Structure {
 public:
  explicit Structure(Signature signature = Signature::graph());

  // Graph on vertices 0..n-1 with the given edges.
  static Structure graph(std::size_t n,
                         const std::vector<std::pair<ElementId, ElementId>>& edges = {});

  const Signature& signature() const { return signature_; }
  const ElementSet& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }
  bool has_element(ElementId id) const;

  // Adds the next unused id (one past the current maximum) and returns it.
  ElementId add_element();
  // Adds a specific id; a no-op if already present.
  void add_element(ElementId id);

  // Elements must already exist and be pairwise distinct. Adding an instance
  // twice under the same symbol is a no-op.
  void add_instance(std::size_t symbol, std::vector<ElementId> elements);
  void add_instance(std::string_view symbol, std::vector<ElementId> elements);
  void add_edge(ElementId u, ElementId v);

  const std::set<Instance>& instances(std::size_t symbol) const {
    return instances_.at(symbol);
  }
  bool has_instance(std::size_t symbol, const Instance& inst) const;
  bool adjacent(ElementId u, ElementId v) const;

  // Total number of instances summed over symbols.
  std::size_t instance_count() const;
  ElementId next_id() const;

  bool operator==(const Structure&) const = default;

 private:
  Signature signature_;
  ElementSet elements_;
  std::vector<std::set<Instance>> instances_;
};

// Throws UnknownElement if some id of `ids` is not an element of `s`.
void require_elements(const Structure& s, const ElementSet& ids);

Structure induced(const Structure& s, const ElementSet& x);

// Free amalgam of b and c over a = elements(b) ∩ elements(c). Element ids are
// shared, not renamed.
Structure free_amalgam(const Structure& b, const Structure& c, const ElementSet& a);

// Result of gluing c onto b along an identification of some of c's
// elements with elements of b; the remaining elements of c get fresh ids.
struct Gluing {
  Structure result;
  std::map<ElementId, ElementId> right_map;  // c id -> result id
};

// `identify` maps ids of c to ids of b. The induced structures on the
// identified parts must agree (BaseMismatch otherwise).
Gluing glue(const Structure& b, const Structure& c,
            const std::map<ElementId, ElementId>& identify);

// Renames elements; `map` must be injective and cover every element.
Structure relabel(const Structure& s, const std::map<ElementId, ElementId>& map);

// Renames elements to 0..n-1 in increasing order.
Structure compact(const Structure& s, std::map<ElementId, ElementId>* map = nullptr);

struct Embedding {
  std::map<ElementId, ElementId> map;
  ElementSet image() const;
  bool operator==(const Embedding&) const = default;
};

// All induced embeddings of b into m fixing a pointwise, ordered
// lexicographically by the images of b's elements taken in increasing id
// order. Uses adjacency bitsets when both structures are graphs.
std::vector<Embedding> embeddings_over(const Structure& b, const ElementSet& a,
                                       const Structure& m, Budget* budget = nullptr);

bool isomorphic_over(const Structure& s1, const Structure& s2, const ElementSet& c);

namespace detail {
// Visitor returns false to stop the enumeration.
using EmbeddingVisitor = std::function<bool(const Embedding&)>;
void enumerate_embeddings_generic(const Structure& b, const ElementSet& a,
                                  const Structure& m, Budget* budget,
                                  const EmbeddingVisitor& visit);
void enumerate_embeddings_graph(const Structure& b, const ElementSet& a,
                                const Structure& m, Budget* budget,
                                const EmbeddingVisitor& visit);
std::vector<Embedding> embeddings_generic(const Structure& b, const ElementSet& a,
                                          const Structure& m);
std::vector<Embedding> embeddings_graph(const Structure& b, const ElementSet& a,
                                        const Structure& m);
}  // namespace detail

}  // namespace predim
