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

#include "predim/structure_io.hpp"

#include <sstream>

namespace predim {

nlohmann::json to_json(const Structure& s) {
  nlohmann::json j;
  nlohmann::json sig = nlohmann::json::object();
  nlohmann::json inst = nlohmann::json::object();
  for (std::size_t r = 0; r < s.signature().size(); ++r) {
    const RelationSymbol& rel = s.signature().symbol(r);
    sig[rel.name] = rel.arity;
    nlohmann::json list = nlohmann::json::array();
    for (const Instance& i : s.instances(r)) list.push_back(i);
    inst[rel.name] = std::move(list);
  }
  j["signature"] = std::move(sig);
  j["elements"] = s.elements();
  j["instances"] = std::move(inst);
  return j;
}

Structure structure_from_json(const nlohmann::json& j) {
  try {
    if (!j.is_object()) throw InvalidArgument("structure JSON must be an object");
    Signature sig;
    if (j.contains("signature")) {
      for (auto& [name, arity] : j.at("signature").items()) {
        sig.add(name, arity.get<int>());
      }
    } else {
      sig = Signature::graph();
    }
    Structure s(sig);
    for (const auto& id : j.at("elements")) s.add_element(id.get<ElementId>());
    if (j.contains("instances")) {
      for (auto& [name, list] : j.at("instances").items()) {
        std::size_t r = sig.index_of(name);
        for (const auto& inst : list) s.add_instance(r, inst.get<std::vector<ElementId>>());
      }
    }
    return s;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("malformed structure JSON: ") + e.what());
  }
}

std::string canonical(const Structure& s) { return to_json(s).dump(); }

std::string to_dot(const Structure& s, const ElementSet& highlight) {
  if (!s.signature().all_binary()) throw InvalidArgument("DOT export needs binary relations");
  std::ostringstream out;
  out << "graph G {\n";
  for (ElementId id : s.elements()) {
    out << "  " << id;
    if (contains(highlight, id)) out << " [shape=box]";
    out << ";\n";
  }
  const bool labelled = s.signature().size() > 1;
  for (std::size_t r = 0; r < s.signature().size(); ++r) {
    for (const Instance& e : s.instances(r)) {
      out << "  " << e[0] << " -- " << e[1];
      if (labelled) out << " [label=\"" << s.signature().symbol(r).name << "\"]";
      out << ";\n";
    }
  }
  out << "}\n";
  return out.str();
}

ElementSet parse_element_list(const std::string& text) {
  std::vector<ElementId> ids;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    try {
      std::size_t used = 0;
      unsigned long v = std::stoul(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      ids.push_back(static_cast<ElementId>(v));
    } catch (const std::exception&) {
      throw InvalidArgument("bad element id '" + item + "'");
    }
  }
  return make_set(std::move(ids));
}

}  // namespace predim
