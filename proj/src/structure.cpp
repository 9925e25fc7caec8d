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

#include "predim/structure.hpp"

#include <algorithm>
#include <unordered_map>

#include <boost/dynamic_bitset.hpp>

namespace predim {

ElementSet make_set(std::vector<ElementId> ids) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

ElementSet set_union(const ElementSet& a, const ElementSet& b) {
  ElementSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

ElementSet set_intersection(const ElementSet& a, const ElementSet& b) {
  ElementSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

ElementSet set_difference(const ElementSet& a, const ElementSet& b) {
  ElementSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool is_subset(const ElementSet& a, const ElementSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

bool contains(const ElementSet& s, ElementId id) {
  return std::binary_search(s.begin(), s.end(), id);
}

Signature Signature::graph() {
  Signature sig;
  sig.add("E", 2);
  return sig;
}

std::size_t Signature::add(std::string name, int arity) {
  if (arity < 2) throw InvalidArgument("relation '" + name + "' needs arity >= 2");
  if (find(name)) throw InvalidArgument("duplicate relation symbol '" + name + "'");
  symbols_.push_back({std::move(name), arity});
  return symbols_.size() - 1;
}

std::optional<std::size_t> Signature::find(std::string_view name) const {
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    if (symbols_[i].name == name) return i;
  }
  return std::nullopt;
}

std::size_t Signature::index_of(std::string_view name) const {
  auto i = find(name);
  if (!i) throw InvalidArgument("unknown relation symbol '" + std::string(name) + "'");
  return *i;
}

bool Signature::is_graph() const { return symbols_.size() == 1 && symbols_[0].arity == 2; }

bool Signature::all_binary() const {
  return std::all_of(symbols_.begin(), symbols_.end(),
                     [](const RelationSymbol& r) { return r.arity == 2; });
}

Structure::Structure(Signature signature)
    : signature_(std::move(signature)), instances_(signature_.size()) {}

Structure Structure::graph(std::size_t n,
                           const std::vector<std::pair<ElementId, ElementId>>& edges) {
  Structure s;
  for (std::size_t i = 0; i < n; ++i) s.add_element(static_cast<ElementId>(i));
  for (auto [u, v] : edges) s.add_edge(u, v);
  return s;
}

bool Structure::has_element(ElementId id) const { return contains(elements_, id); }

ElementId Structure::add_element() {
  ElementId id = next_id();
  elements_.push_back(id);
  return id;
}

void Structure::add_element(ElementId id) {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), id);
  if (it == elements_.end() || *it != id) elements_.insert(it, id);
}

void Structure::add_instance(std::size_t symbol, std::vector<ElementId> elements) {
  if (symbol >= signature_.size()) throw InvalidArgument("relation index out of range");
  const RelationSymbol& rel = signature_.symbol(symbol);
  if (elements.size() != static_cast<std::size_t>(rel.arity)) {
    throw InvalidArgument("instance of '" + rel.name + "' has wrong arity");
  }
  std::sort(elements.begin(), elements.end());
  if (std::adjacent_find(elements.begin(), elements.end()) != elements.end()) {
    throw InvalidArgument("instance of '" + rel.name + "' repeats an element");
  }
  for (ElementId id : elements) {
    if (!has_element(id)) throw UnknownElement("unknown element " + std::to_string(id));
  }
  instances_[symbol].insert(std::move(elements));
}

void Structure::add_instance(std::string_view symbol, std::vector<ElementId> elements) {
  add_instance(signature_.index_of(symbol), std::move(elements));
}

void Structure::add_edge(ElementId u, ElementId v) { add_instance(std::size_t{0}, {u, v}); }

bool Structure::has_instance(std::size_t symbol, const Instance& inst) const {
  return instances_.at(symbol).count(inst) > 0;
}

bool Structure::adjacent(ElementId u, ElementId v) const {
  Instance key = u < v ? Instance{u, v} : Instance{v, u};
  for (std::size_t r = 0; r < instances_.size(); ++r) {
    if (signature_.symbol(r).arity == 2 && instances_[r].count(key)) return true;
  }
  return false;
}

std::size_t Structure::instance_count() const {
  std::size_t total = 0;
  for (const auto& set : instances_) total += set.size();
  return total;
}

ElementId Structure::next_id() const { return elements_.empty() ? 0 : elements_.back() + 1; }

void require_elements(const Structure& s, const ElementSet& ids) {
  for (ElementId id : ids) {
    if (!s.has_element(id)) throw UnknownElement("unknown element " + std::to_string(id));
  }
}

Structure induced(const Structure& s, const ElementSet& x) {
  require_elements(s, x);
  Structure out(s.signature());
  for (ElementId id : x) out.add_element(id);
  for (std::size_t r = 0; r < s.signature().size(); ++r) {
    for (const Instance& inst : s.instances(r)) {
      if (is_subset(inst, x)) out.add_instance(r, inst);
    }
  }
  return out;
}

Structure free_amalgam(const Structure& b, const Structure& c, const ElementSet& a) {
  if (!(b.signature() == c.signature())) throw InvalidArgument("signatures differ");
  if (set_intersection(b.elements(), c.elements()) != a) {
    throw OverlapViolation("free amalgam: the two sides must intersect exactly in the base");
  }
  if (!(induced(b, a) == induced(c, a))) {
    throw BaseMismatch("free amalgam: the sides induce different structures on the base");
  }
  Structure out = b;
  for (ElementId id : c.elements()) out.add_element(id);
  for (std::size_t r = 0; r < c.signature().size(); ++r) {
    for (const Instance& inst : c.instances(r)) out.add_instance(r, inst);
  }
  return out;
}

Gluing glue(const Structure& b, const Structure& c,
            const std::map<ElementId, ElementId>& identify) {
  if (!(b.signature() == c.signature())) throw InvalidArgument("signatures differ");
  std::set<ElementId> targets;
  for (auto [from, to] : identify) {
    if (!c.has_element(from) || !b.has_element(to)) {
      throw UnknownElement("glue: identification names an unknown element");
    }
    if (!targets.insert(to).second) throw InvalidArgument("glue: identification not injective");
  }
  Gluing g{b, {}};
  ElementId next = b.next_id();
  for (ElementId id : c.elements()) {
    auto it = identify.find(id);
    g.right_map[id] = it != identify.end() ? it->second : next++;
  }
  ElementSet base;
  ElementSet base_in_c;
  for (auto [from, to] : identify) {
    base.push_back(to);
    base_in_c.push_back(from);
  }
  base = make_set(base);
  base_in_c = make_set(base_in_c);
  Structure c_base = relabel(induced(c, base_in_c), [&] {
    std::map<ElementId, ElementId> m;
    for (ElementId id : base_in_c) m[id] = g.right_map[id];
    return m;
  }());
  if (!(c_base == induced(b, base))) {
    throw BaseMismatch("glue: identified parts induce different structures");
  }
  for (ElementId id : c.elements()) g.result.add_element(g.right_map[id]);
  for (std::size_t r = 0; r < c.signature().size(); ++r) {
    for (const Instance& inst : c.instances(r)) {
      Instance mapped;
      for (ElementId id : inst) mapped.push_back(g.right_map[id]);
      g.result.add_instance(r, std::move(mapped));
    }
  }
  return g;
}

Structure relabel(const Structure& s, const std::map<ElementId, ElementId>& map) {
  Structure out(s.signature());
  std::set<ElementId> seen;
  for (ElementId id : s.elements()) {
    auto it = map.find(id);
    if (it == map.end()) throw UnknownElement("relabel: element " + std::to_string(id) + " unmapped");
    if (!seen.insert(it->second).second) throw InvalidArgument("relabel: map not injective");
    out.add_element(it->second);
  }
  for (std::size_t r = 0; r < s.signature().size(); ++r) {
    for (const Instance& inst : s.instances(r)) {
      Instance mapped;
      for (ElementId id : inst) mapped.push_back(map.at(id));
      out.add_instance(r, std::move(mapped));
    }
  }
  return out;
}

Structure compact(const Structure& s, std::map<ElementId, ElementId>* map) {
  std::map<ElementId, ElementId> m;
  ElementId next = 0;
  for (ElementId id : s.elements()) m[id] = next++;
  if (map) *map = m;
  return relabel(s, m);
}

ElementSet Embedding::image() const {
  ElementSet out;
  for (auto [from, to] : map) out.push_back(to);
  return make_set(std::move(out));
}

namespace detail {
namespace {

struct Incidence {
  // Per element: (symbol, instance) pairs containing it.
  std::unordered_map<ElementId, std::vector<std::pair<std::size_t, const Instance*>>> of;

  explicit Incidence(const Structure& s) {
    for (std::size_t r = 0; r < s.signature().size(); ++r) {
      for (const Instance& inst : s.instances(r)) {
        for (ElementId id : inst) of[id].emplace_back(r, &inst);
      }
    }
  }
  const std::vector<std::pair<std::size_t, const Instance*>>& at(ElementId id) const {
    static const std::vector<std::pair<std::size_t, const Instance*>> kEmpty;
    auto it = of.find(id);
    return it == of.end() ? kEmpty : it->second;
  }
};

bool base_agrees(const Structure& b, const ElementSet& a, const Structure& m) {
  return induced(b, a) == induced(m, a);
}

}  // namespace

void enumerate_embeddings_generic(const Structure& b, const ElementSet& a,
                                  const Structure& m, Budget* budget,
                                  const EmbeddingVisitor& visit) {
  require_elements(b, a);
  require_elements(m, a);
  if (!(b.signature() == m.signature())) throw InvalidArgument("signatures differ");
  if (!base_agrees(b, a, m)) return;
  const ElementSet free = set_difference(b.elements(), a);
  const ElementSet targets = set_difference(m.elements(), a);
  const Incidence inc_b(b), inc_m(m);

  Embedding emb;
  std::unordered_map<ElementId, ElementId> inverse;
  for (ElementId id : a) {
    emb.map[id] = id;
    inverse[id] = id;
  }

  auto consistent = [&](ElementId u, ElementId img) {
    for (auto [r, inst] : inc_b.at(u)) {
      Instance mapped;
      bool complete = true;
      for (ElementId id : *inst) {
        if (id == u) {
          mapped.push_back(img);
          continue;
        }
        auto it = emb.map.find(id);
        if (it == emb.map.end()) {
          complete = false;
          break;
        }
        mapped.push_back(it->second);
      }
      if (!complete) continue;
      std::sort(mapped.begin(), mapped.end());
      if (!m.has_instance(r, mapped)) return false;
    }
    for (auto [r, inst] : inc_m.at(img)) {
      Instance pre;
      bool complete = true;
      for (ElementId id : *inst) {
        if (id == img) {
          pre.push_back(u);
          continue;
        }
        auto it = inverse.find(id);
        if (it == inverse.end()) {
          complete = false;
          break;
        }
        pre.push_back(it->second);
      }
      if (!complete) continue;
      std::sort(pre.begin(), pre.end());
      if (!b.has_instance(r, pre)) return false;
    }
    return true;
  };

  bool stop = false;
  auto rec = [&](auto&& self, std::size_t depth) -> void {
    if (stop) return;
    if (budget) budget->charge();
    if (depth == free.size()) {
      if (!visit(emb)) stop = true;
      return;
    }
    ElementId u = free[depth];
    for (ElementId img : targets) {
      if (inverse.count(img)) continue;
      if (!consistent(u, img)) continue;
      emb.map[u] = img;
      inverse[img] = u;
      self(self, depth + 1);
      emb.map.erase(u);
      inverse.erase(img);
      if (stop) return;
    }
  };
  rec(rec, 0);
}

void enumerate_embeddings_graph(const Structure& b, const ElementSet& a,
                                const Structure& m, Budget* budget,
                                const EmbeddingVisitor& visit) {
  if (!b.signature().is_graph() || !m.signature().is_graph()) {
    throw InvalidArgument("graph fast path needs a single binary relation");
  }
  require_elements(b, a);
  require_elements(m, a);
  using Bits = boost::dynamic_bitset<>;
  const ElementSet& mel = m.elements();
  const std::size_t nm = mel.size();
  auto midx = [&](ElementId id) {
    return static_cast<std::size_t>(std::lower_bound(mel.begin(), mel.end(), id) - mel.begin());
  };
  std::vector<Bits> adj(nm, Bits(nm));
  for (const Instance& e : m.instances(0)) {
    std::size_t i = midx(e[0]), j = midx(e[1]);
    adj[i].set(j);
    adj[j].set(i);
  }
  // Order: base elements first (fixed), then the free elements ascending.
  const ElementSet free = set_difference(b.elements(), a);
  std::vector<ElementId> order(a.begin(), a.end());
  order.insert(order.end(), free.begin(), free.end());
  std::vector<std::size_t> image(order.size());
  Bits used(nm);
  for (std::size_t i = 0; i < a.size(); ++i) {
    image[i] = midx(a[i]);
    used.set(image[i]);
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (b.adjacent(a[i], a[j]) != adj[image[i]].test(image[j])) return;
    }
  }
  // Adjacency of each free element to earlier positions in `order`.
  std::vector<std::vector<bool>> b_adj(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    b_adj[i].resize(i);
    for (std::size_t j = 0; j < i; ++j) b_adj[i][j] = b.adjacent(order[i], order[j]);
  }

  bool stop = false;
  Embedding emb;
  auto rec = [&](auto&& self, std::size_t depth) -> void {
    if (stop) return;
    if (budget) budget->charge();
    if (depth == order.size()) {
      emb.map.clear();
      for (std::size_t i = 0; i < order.size(); ++i) emb.map[order[i]] = mel[image[i]];
      if (!visit(emb)) stop = true;
      return;
    }
    Bits cand = ~used;
    for (std::size_t j = 0; j < depth; ++j) {
      if (b_adj[depth][j]) {
        cand &= adj[image[j]];
      } else {
        cand -= adj[image[j]];
      }
    }
    for (std::size_t c = cand.find_first(); c != Bits::npos; c = cand.find_next(c)) {
      image[depth] = c;
      used.set(c);
      self(self, depth + 1);
      used.reset(c);
      if (stop) return;
    }
  };
  rec(rec, a.size());
}

std::vector<Embedding> embeddings_generic(const Structure& b, const ElementSet& a,
                                          const Structure& m) {
  std::vector<Embedding> out;
  enumerate_embeddings_generic(b, a, m, nullptr, [&](const Embedding& e) {
    out.push_back(e);
    return true;
  });
  return out;
}

std::vector<Embedding> embeddings_graph(const Structure& b, const ElementSet& a,
                                        const Structure& m) {
  std::vector<Embedding> out;
  enumerate_embeddings_graph(b, a, m, nullptr, [&](const Embedding& e) {
    out.push_back(e);
    return true;
  });
  return out;
}

}  // namespace detail

std::vector<Embedding> embeddings_over(const Structure& b, const ElementSet& a,
                                       const Structure& m, Budget* budget) {
  std::vector<Embedding> out;
  auto collect = [&](const Embedding& e) {
    out.push_back(e);
    return true;
  };
  if (b.signature().is_graph() && m.signature().is_graph()) {
    detail::enumerate_embeddings_graph(b, a, m, budget, collect);
  } else {
    detail::enumerate_embeddings_generic(b, a, m, budget, collect);
  }
  return out;
}

bool isomorphic_over(const Structure& s1, const Structure& s2, const ElementSet& c) {
  if (s1.size() != s2.size() || !(s1.signature() == s2.signature())) return false;
  for (std::size_t r = 0; r < s1.signature().size(); ++r) {
    if (s1.instances(r).size() != s2.instances(r).size()) return false;
  }
  bool found = false;
  auto first = [&](const Embedding&) {
    found = true;
    return false;
  };
  if (s1.signature().is_graph()) {
    detail::enumerate_embeddings_graph(s1, c, s2, nullptr, first);
  } else {
    detail::enumerate_embeddings_generic(s1, c, s2, nullptr, first);
  }
  return found;
}

}  // namespace predim
