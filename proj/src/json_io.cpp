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

#include "divmat/json_io.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "divmat/errors.hpp"
#include "divmat/feasible.hpp"

namespace divmat {
namespace {

using nlohmann::json;

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw InvalidInputError("expected integer or \"p/q\" string, got " +
                          j.dump());
}

Distribution distribution_from_json(const json& j, int grid) {
  if (!j.is_array() || static_cast<int>(j.size()) != grid) {
    throw InvalidInputError("distribution must be an array of " +
                            std::to_string(grid) + " counts");
  }
  std::vector<int> counts;
  for (const json& v : j) counts.push_back(v.get<int>());
  return Distribution(std::move(counts));
}

ConcaveSeq seq_from_json(const json& j) {
  std::vector<Rational> values;
  for (const json& v : j) values.push_back(rational_from_json(v));
  return ConcaveSeq(std::move(values));
}

FeasiblePtr feasible_from_json(const json& j, int num_schools, int num_types) {
  const std::string kind = j.at("kind").get<std::string>();
  const int grid = num_schools * num_types;
  if (kind == "total_cap") {
    return FeasibleSet::total_cap(num_schools, num_types, j.at("q").get<int>());
  }
  if (kind == "per_school_caps") {
    std::vector<int> caps = j.at("caps").get<std::vector<int>>();
    if (static_cast<int>(caps.size()) != num_schools) {
      throw InvalidInputError("per_school_caps: one capacity per school");
    }
    return FeasibleSet::per_school_caps(num_types, std::move(caps));
  }
  if (kind == "box") {
    return FeasibleSet::box(distribution_from_json(j.at("upper"), grid));
  }
  if (kind == "explicit") {
    std::vector<Distribution> members;
    for (const json& m : j.at("members")) {
      members.push_back(distribution_from_json(m, grid));
    }
    return FeasibleSet::explicit_set(std::move(members));
  }
  throw InvalidInputError("unknown feasible kind: " + kind);
}

DiversityIndex index_from_json(const json& j, const Instance& inst,
                               FeasiblePtr domain) {
  const std::string kind = j.at("kind").get<std::string>();
  const int grid = inst.grid_size();
  if (kind == "tabular") {
    std::map<Distribution, Rational> table;
    for (const json& row : j.at("table")) {
      table[distribution_from_json(row.at("xi"), grid)] =
          rational_from_json(row.at("value"));
    }
    return tabular(std::move(table), std::move(domain));
  }
  if (kind == "saturated") {
    ReserveProfile reserves{j.at("reserves").get<std::vector<int>>()};
    return saturated(reserves, std::move(domain));
  }
  if (kind == "marginally_decreasing") {
    std::vector<ConcaveSeq> g;
    for (const json& seq : j.at("g")) g.push_back(seq_from_json(seq));
    return marginally_decreasing(std::move(g), std::move(domain));
  }
  if (kind == "university") {
    std::set<int> minority_cells;
    for (const json& t : j.at("minority_types")) {
      const std::string name = t.get<std::string>();
      int type_index = -1;
      for (std::size_t i = 0; i < inst.types().size(); ++i) {
        if (inst.types()[i] == name) type_index = static_cast<int>(i);
      }
      if (type_index < 0) {
        throw InvalidInputError("unknown minority type: " + name);
      }
      for (std::size_t s = 0; s < inst.schools().size(); ++s) {
        minority_cells.insert(inst.cell(static_cast<int>(s), type_index));
      }
    }
    std::vector<ConcaveSeq> g;
    for (const json& seq : j.at("g")) g.push_back(seq_from_json(seq));
    return university(std::move(minority_cells), seq_from_json(j.at("h")),
                      std::move(g), std::move(domain));
  }
  throw InvalidInputError("unknown index kind: " + kind);
}

}  // namespace

std::string digest_of(const json& j) {
  const std::string canonical = j.dump();
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : canonical) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(h));
  return buf;
}

static LoadedInstance parse_instance_impl(const json& j);

LoadedInstance parse_instance(const json& j) {
  try {
    return parse_instance_impl(j);
  } catch (const json::exception& e) {
    throw InvalidInputError(std::string("instance schema violation: ") +
                            e.what());
  }
}

static LoadedInstance parse_instance_impl(const json& j) {
  auto schools = j.at("schools").get<std::vector<std::string>>();
  auto types = j.at("types").get<std::vector<std::string>>();
  std::vector<Contract> contracts;
  for (const json& c : j.at("contracts")) {
    contracts.push_back({c.at("id").get<std::string>(),
                         c.at("school").get<std::string>(),
                         c.at("student").get<std::string>(),
                         c.at("type").get<std::string>()});
  }
  Instance inst = [&] {
    if (j.contains("merit")) {
      return Instance::with_merit_order(
          schools, types, contracts,
          j.at("merit").get<std::vector<ContractId>>());
    }
    std::unordered_map<ContractId, int> ranks;
    for (const auto& [id, rank] : j.at("merit_ranks").items()) {
      ranks[id] = rank.get<int>();
    }
    return Instance(schools, types, contracts, std::move(ranks));
  }();

  FeasiblePtr domain = feasible_from_json(
      j.at("feasible"), static_cast<int>(schools.size()),
      static_cast<int>(types.size()));
  DiversityIndex index = index_from_json(j.at("index"), inst, domain);

  ContractSet all;
  for (const Contract& c : contracts) all.insert(c.id);

  std::optional<Rational> lambda;
  if (j.contains("options") && j.at("options").contains("lambda")) {
    lambda = rational_from_json(j.at("options").at("lambda"));
  }
  return {std::move(inst), std::move(index), std::move(all), std::move(lambda),
          digest_of(j)};
}

LoadedInstance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInputError("cannot open instance file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw InvalidInputError(std::string("malformed JSON: ") + e.what());
  }
  try {
    return parse_instance(j);
  } catch (const json::exception& e) {
    throw InvalidInputError(std::string("instance schema violation: ") +
                            e.what());
  }
}

nlohmann::json rational_to_json(const Rational& r) { return to_string(r); }

nlohmann::json distribution_to_json(const Distribution& xi) {
  return nlohmann::json(xi.counts());
}

}  // namespace divmat
