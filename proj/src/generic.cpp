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

#include "predim/generic.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "predim/structure_io.hpp"

namespace predim {
namespace {

std::vector<std::pair<int, int>> vertex_pairs(int m) {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) out.emplace_back(i, j);
  }
  return out;
}

Structure graph_from_mask(int m, std::uint32_t mask) {
  Structure s = Structure::graph(m);
  const auto pairs = vertex_pairs(m);
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (mask >> i & 1) s.add_edge(pairs[i].first, pairs[i].second);
  }
  return s;
}

// Least edge mask over permutations of the vertices outside {0, .., fixed-1}.
std::uint32_t canonical_mask(int m, int fixed, std::uint32_t mask) {
  const auto pairs = vertex_pairs(m);
  std::vector<std::vector<int>> index(m, std::vector<int>(m, -1));
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    index[pairs[i].first][pairs[i].second] = index[pairs[i].second][pairs[i].first] =
        static_cast<int>(i);
  }
  std::vector<int> perm(m);
  for (int i = 0; i < m; ++i) perm[i] = i;
  std::uint32_t best = mask;
  do {
    std::uint32_t out = 0;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if (mask >> i & 1) out |= std::uint32_t{1} << index[perm[pairs[i].first]][perm[pairs[i].second]];
    }
    best = std::min(best, out);
  } while (std::next_permutation(perm.begin() + fixed, perm.end()));
  return best;
}

ElementSet prefix(int n) {
  ElementSet out;
  for (int i = 0; i < n; ++i) out.push_back(i);
  return out;
}

template <typename Keep>
std::vector<ExtensionType> enumerate_pairs(int max_size, int min_a, Keep keep) {
  if (max_size < 1 || max_size > 6) throw InvalidArgument("catalog size must be in 1..6");
  std::vector<ExtensionType> out;
  for (int j = min_a; j < max_size; ++j) {
    for (int m = j + 1; m <= max_size; ++m) {
      const std::uint32_t count = std::uint32_t{1} << (m * (m - 1) / 2);
      for (std::uint32_t mask = 0; mask < count; ++mask) {
        if (canonical_mask(m, j, mask) != mask) continue;
        ExtensionType t{graph_from_mask(m, mask), j};
        if (keep(t)) out.push_back(std::move(t));
      }
    }
  }
  return out;
}

bool same_shape(const Structure& a, const Structure& m, const std::vector<ElementId>& image) {
  for (std::size_t p = 0; p < image.size(); ++p) {
    for (std::size_t q = p + 1; q < image.size(); ++q) {
      if (a.adjacent(p, q) != m.adjacent(image[p], image[q])) return false;
    }
  }
  return true;
}

// B relabelled so that 0, .., a_size - 1 land on `image` and the rest on
// fresh ids above `fresh`.
Structure place(const ExtensionType& t, const std::vector<ElementId>& image, ElementId fresh) {
  std::map<ElementId, ElementId> map;
  for (ElementId v : t.b.elements()) {
    map[v] = v < image.size() ? image[v] : fresh + v;
  }
  return relabel(t.b, map);
}

}  // namespace

ElementSet ExtensionType::a() const { return prefix(a_size); }

std::vector<ExtensionType> extension_catalog(int max_size, const AlphaSpec& alpha,
                                             const Rational& beta) {
  return enumerate_pairs(max_size, 0, [&](const ExtensionType& t) {
    return is_in_K(t.b, alpha, beta).member && is_strong(t.a(), t.b, alpha, beta);
  });
}

std::vector<ExtensionType> intrinsic_catalog(int max_size, const AlphaSpec& alpha,
                                             const Rational& beta) {
  return enumerate_pairs(max_size, 1, [&](const ExtensionType& t) {
    return is_in_K(t.b, alpha, beta).member && is_intrinsic(t.a(), t.b, alpha, beta);
  });
}

GenericApprox::GenericApprox(AlphaSpec alpha, Rational beta, int max_ext, std::uint64_t seed)
    : alpha_(std::move(alpha)), beta_(std::move(beta)), max_ext_(max_ext), seed_(seed) {
  if (max_ext < 1) throw InvalidArgument("max-ext must be at least 1");
  catalog_ = extension_catalog(max_ext, alpha_, beta_);
}

bool GenericApprox::refill() {
  if (!started_) {
    started_ = true;
    level_index_ = -1;
  } else {
    if (level_index_ + 1 >= static_cast<long>(m_.size())) return false;
    ++level_index_;
  }
  level_.clear();
  cursor_ = 0;

  // Types in a seeded order, fixed per run.
  std::vector<std::size_t> order(catalog_.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::mt19937_64 rng(seed_);
  for (std::size_t i = order.size(); i > 1; --i) std::swap(order[i - 1], order[rng() % i]);

  if (level_index_ < 0) {
    for (std::size_t t : order) {
      if (catalog_[t].a_size == 0) level_.push_back({t, {}});
    }
    return true;
  }
  const ElementId top = static_cast<ElementId>(level_index_);
  std::map<ElementSet, bool> strong;
  std::vector<ElementId> tuple;
  // Ordered tuples of distinct elements <= top that contain top.
  auto visit = [&](auto&& self, int length) -> void {
    if (static_cast<int>(tuple.size()) == length) {
      if (std::find(tuple.begin(), tuple.end(), top) == tuple.end()) return;
      for (std::size_t t : order) {
        const ExtensionType& type = catalog_[t];
        if (type.a_size != length || !same_shape(type.b, m_, tuple)) continue;
        const ElementSet set = make_set(tuple);
        auto it = strong.find(set);
        if (it == strong.end()) it = strong.emplace(set, is_strong(set, m_, alpha_, beta_)).first;
        if (it->second) level_.push_back({t, tuple});
      }
      return;
    }
    for (ElementId v = 0; v <= top; ++v) {
      if (std::find(tuple.begin(), tuple.end(), v) != tuple.end()) continue;
      tuple.push_back(v);
      self(self, length);
      tuple.pop_back();
    }
  };
  for (int length = 1; length < max_ext_; ++length) visit(visit, length);
  return true;
}

bool GenericApprox::next(Obligation* out) {
  while (!started_ || cursor_ >= level_.size()) {
    if (!refill()) return false;
  }
  *out = level_[cursor_++];
  return true;
}

std::vector<Obligation> GenericApprox::peek(std::size_t limit) {
  const auto saved_level = level_;
  const std::size_t saved_cursor = cursor_;
  const long saved_index = level_index_;
  const bool saved_started = started_;
  std::vector<Obligation> out;
  Obligation o;
  while (out.size() < limit && next(&o)) out.push_back(o);
  level_ = saved_level;
  cursor_ = saved_cursor;
  level_index_ = saved_index;
  started_ = saved_started;
  return out;
}

std::size_t GenericApprox::run(std::size_t steps) {
  std::size_t done = 0;
  for (; done < steps; ++done) {
    Obligation o;
    if (!next(&o)) {
      exhausted_ = true;
      break;
    }
    const ExtensionType& type = catalog_[o.type];
    std::map<ElementId, ElementId> identify;
    for (int i = 0; i < type.a_size; ++i) identify[i] = o.image[i];
    Gluing g = glue(m_, type.b, identify);
    m_ = std::move(g.result);
    CompletedTask task{o, {}};
    for (ElementId v : type.b.elements()) task.copy.push_back(g.right_map.at(v));
    completed_.push_back(std::move(task));
    stage_sizes_.push_back(m_.size());
  }
  return done;
}

GenericApprox build_generic(const AlphaSpec& alpha, const Rational& beta, std::size_t steps,
                            int max_ext, std::uint64_t seed) {
  GenericApprox g(alpha, beta, max_ext, seed);
  g.run(steps);
  return g;
}

ExtensionAudit audit_extension(GenericApprox& g, std::size_t unscheduled_limit,
                               const MinimizeOptions& options) {
  ExtensionAudit r;
  const Structure& m = g.structure();
  r.empty_strong = is_strong({}, m, g.alpha(), g.beta(), options);
  for (const CompletedTask& task : g.completed()) {
    ++r.scheduled;
    const ExtensionType& type = g.catalog()[task.obligation.type];
    bool ok = same_shape(type.b, m, task.copy) &&
              std::equal(task.obligation.image.begin(), task.obligation.image.end(),
                         task.copy.begin()) &&
              is_strong(make_set(task.copy), m, g.alpha(), g.beta(), options);
    if (ok) {
      ++r.scheduled_ok;
    } else {
      r.failures.push_back("stage " + std::to_string(r.scheduled) + ": copy not strong");
    }
  }
  for (const Obligation& o : g.peek(unscheduled_limit)) {
    ++r.unscheduled;
    const ExtensionType& type = g.catalog()[o.type];
    const ElementSet a = make_set(o.image);
    const Structure b = place(type, o.image, m.next_id());
    for (const Embedding& e : embeddings_over(b, a, m, options.budget)) {
      if (is_strong(e.image(), m, g.alpha(), g.beta(), options)) {
        ++r.unscheduled_ok;
        break;
      }
    }
  }
  return r;
}

ClosureAudit audit_finite_closures(const GenericApprox& g, std::size_t samples,
                                   std::uint64_t seed, const MinimizeOptions& options) {
  ClosureAudit r;
  const Structure& m = g.structure();
  const auto& sizes = g.stage_sizes();
  const std::size_t stages = sizes.size() - 1;
  const std::size_t step = std::max<std::size_t>(1, stages / 50);
  for (std::size_t i = 0; i < stages; i += step) {
    ++r.stages_checked;
    const Structure next = induced(m, prefix(static_cast<int>(sizes[i + 1])));
    if (is_strong(prefix(static_cast<int>(sizes[i])), next, g.alpha(), g.beta(), options)) {
      ++r.stages_ok;
    } else {
      r.failures.push_back("stage " + std::to_string(i) + " not strong in its successor");
    }
  }
  if (m.empty()) return r;
  std::mt19937_64 rng(seed);
  for (std::size_t t = 0; t < samples; ++t) {
    ++r.samples;
    const std::size_t size = 1 + rng() % std::min<std::size_t>(3, m.size());
    ElementSet a;
    while (a.size() < size) a = make_set(set_union(a, {static_cast<ElementId>(rng() % m.size())}));
    const ClosureResult c = icl(m, a, g.alpha(), g.beta(), options);
    // The first stage holding a is strong in M, so it holds icl(a) too.
    const std::size_t first = *std::upper_bound(sizes.begin(), sizes.end(), a.back());
    const bool ok = c.converged && is_subset(a, c.closure) &&
                    is_strong(c.closure, m, g.alpha(), g.beta(), options) &&
                    c.closure.back() < first;
    if (ok) {
      ++r.closures_ok;
    } else {
      r.failures.push_back("closure of sample " + std::to_string(t));
    }
  }
  return r;
}

std::vector<ChiPoint> chi_growth(const GenericApprox& g, std::size_t checkpoints,
                                 std::size_t max_images) {
  std::vector<ChiPoint> out;
  const std::vector<ExtensionType> types = intrinsic_catalog(g.max_ext(), g.alpha(), g.beta());
  const auto& sizes = g.stage_sizes();
  const std::size_t stages = sizes.size() - 1;
  if (checkpoints == 0) return out;
  for (std::size_t c = 1; c <= checkpoints; ++c) {
    const std::size_t stage = stages * c / checkpoints;
    const Structure sub = induced(g.structure(), prefix(static_cast<int>(sizes[stage])));
    for (std::size_t t = 0; t < types.size(); ++t) {
      const ExtensionType& type = types[t];
      const Structure a_shape = induced(type.b, type.a());
      ChiPoint point{t, stage, 0, 0};
      for (const Embedding& e : embeddings_over(a_shape, {}, sub)) {
        if (point.images >= max_images) break;
        std::vector<ElementId> image;
        for (ElementId v : type.a()) image.push_back(e.map.at(v));
        ++point.images;
        const Structure b = place(type, image, sub.next_id());
        point.max_chi = std::max(point.max_chi, chi(sub, b, make_set(image)).chi);
      }
      out.push_back(point);
    }
  }
  return out;
}

nlohmann::json to_json(const GenericApprox& g) {
  nlohmann::json j;
  j["alpha"] = g.alpha().describe();
  j["beta"] = to_string(g.beta());
  j["max_ext"] = g.max_ext();
  j["seed"] = g.seed();
  j["stage"] = g.stage();
  j["catalog"] = g.catalog().size();
  j["exhausted"] = g.exhausted();
  j["structure"] = to_json(g.structure());
  return j;
}

}  // namespace predim
