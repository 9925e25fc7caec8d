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

#include <string>

#include "json.hpp"
#include "predim/structure.hpp"

namespace predim {

// {"signature": {name: arity}, "elements": [ids], "instances": {name: [[ids]]}}
// with sorted ids and sorted instance lists.
nlohmann::json to_json(const Structure& s);

// Validates arities, distinctness and membership; throws InvalidArgument
// or UnknownElement.
Structure structure_from_json(const nlohmann::json& j);

// Compact canonical text; equal structures give identical bytes.
std::string canonical(const Structure& s);

// DOT rendering for all-binary signatures. Distinguished elements, if any,
// are drawn as boxes.
std::string to_dot(const Structure& s, const ElementSet& highlight = {});

ElementSet parse_element_list(const std::string& text);

}  // namespace predim
