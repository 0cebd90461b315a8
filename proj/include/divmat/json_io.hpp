// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DIVMAT_JSON_IO_HPP_
#define DIVMAT_JSON_IO_HPP_

#include <optional>
#include <string>

#include <json.hpp>

#include "divmat/core.hpp"
#include "divmat/indices.hpp"
#include "divmat/matroid.hpp"

namespace divmat {

// A parsed instance file: the market, the feasible set, and the index.
// See docs/instance-schema.md for the JSON layout.
struct LoadedInstance {
  Instance inst;
  DiversityIndex index;
  ContractSet all_contracts;
  std::optional<Rational> lambda;
  std::string digest;
};

LoadedInstance load_instance(const std::string& path);
LoadedInstance parse_instance(const nlohmann::json& j);

// FNV-1a over a canonical re-serialization; stable across whitespace.
std::string digest_of(const nlohmann::json& j);

nlohmann::json rational_to_json(const Rational& r);
nlohmann::json distribution_to_json(const Distribution& xi);

}  // namespace divmat

#endif  // DIVMAT_JSON_IO_HPP_
