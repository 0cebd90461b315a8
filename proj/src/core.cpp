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

#include "divmat/core.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "divmat/errors.hpp"

namespace divmat {

Distribution::Distribution(std::vector<int> counts)
    : counts_(std::move(counts)) {
  for (int v : counts_) {
    if (v < 0) throw InvalidInputError("distribution entry must be >= 0");
  }
}

Distribution Distribution::zeros(int size) {
  return Distribution(std::vector<int>(size, 0));
}

int Distribution::norm() const {
  return std::accumulate(counts_.begin(), counts_.end(), 0);
}

Distribution Distribution::plus(int cell) const {
  Distribution d = *this;
  ++d.counts_[cell];
  return d;
}

Distribution Distribution::minus(int cell) const {
  Distribution d = *this;
  if (d.counts_[cell] == 0) {
    throw InvalidInputError("cannot decrement a zero coordinate");
  }
  --d.counts_[cell];
  return d;
}

bool Distribution::leq(const Distribution& other) const {
  if (size() != other.size()) {
    throw InvalidInputError("distribution grid mismatch");
  }
  for (int i = 0; i < size(); ++i) {
    if (counts_[i] > other.counts_[i]) return false;
  }
  return true;
}

std::string Distribution::str() const {
  std::ostringstream os;
  os << "(";
  for (int i = 0; i < size(); ++i) {
    if (i) os << ",";
    os << counts_[i];
  }
  os << ")";
  return os.str();
}

Instance::Instance(std::vector<std::string> schools,
                   std::vector<std::string> types,
                   std::vector<Contract> contracts,
                   std::unordered_map<ContractId, int> merit_ranks)
    : schools_(std::move(schools)),
      types_(std::move(types)),
      contracts_(std::move(contracts)),
      merit_(std::move(merit_ranks)) {
  for (int i = 0; i < static_cast<int>(schools_.size()); ++i) {
    if (!school_index_.emplace(schools_[i], i).second) {
      throw InvalidInputError("duplicate school id: " + schools_[i]);
    }
  }
  for (int i = 0; i < static_cast<int>(types_.size()); ++i) {
    if (!type_index_.emplace(types_[i], i).second) {
      throw InvalidInputError("duplicate type id: " + types_[i]);
    }
  }
  std::unordered_map<std::string, std::string> student_type;
  for (int i = 0; i < static_cast<int>(contracts_.size()); ++i) {
    const Contract& c = contracts_[i];
    if (!contract_index_.emplace(c.id, i).second) {
      throw InvalidInputError("duplicate contract id: " + c.id);
    }
    if (!school_index_.count(c.school)) {
      throw InvalidInputError("contract " + c.id + " references unknown school " +
                              c.school);
    }
    if (!type_index_.count(c.type)) {
      throw InvalidInputError("contract " + c.id + " references unknown type " +
                              c.type);
    }
    // One type per student: the type is a function of the student.
    auto [it, inserted] = student_type.emplace(c.student, c.type);
    if (!inserted && it->second != c.type) {
      throw InvalidInputError("student " + c.student +
                              " appears with two distinct types");
    }
  }
  const int n = static_cast<int>(contracts_.size());
  if (static_cast<int>(merit_.size()) != n) {
    throw InvalidInputError("merit ranking must cover exactly the contracts");
  }
  std::vector<bool> seen(n, false);
  for (const auto& [id, rank] : merit_) {
    if (!contract_index_.count(id)) {
      throw InvalidInputError("merit ranking mentions unknown contract " + id);
    }
    if (rank < 0 || rank >= n || seen[rank]) {
      throw InvalidInputError("merit ranks must be a permutation of 0..n-1");
    }
    seen[rank] = true;
  }
}

Instance Instance::with_merit_order(std::vector<std::string> schools,
                                    std::vector<std::string> types,
                                    std::vector<Contract> contracts,
                                    const std::vector<ContractId>& merit_order) {
  std::unordered_map<ContractId, int> ranks;
  for (int i = 0; i < static_cast<int>(merit_order.size()); ++i) {
    ranks[merit_order[i]] = i;
  }
  if (ranks.size() != merit_order.size()) {
    throw InvalidInputError("merit order contains a duplicate id");
  }
  return Instance(std::move(schools), std::move(types), std::move(contracts),
                  std::move(ranks));
}

bool Instance::has_contract(const ContractId& id) const {
  return contract_index_.count(id) != 0;
}

const Contract& Instance::contract(const ContractId& id) const {
  auto it = contract_index_.find(id);
  if (it == contract_index_.end()) {
    throw InvalidInputError("unknown contract id: " + id);
  }
  return contracts_[it->second];
}

int Instance::cell_of(const ContractId& id) const {
  const Contract& c = contract(id);
  return cell(school_index_.at(c.school), type_index_.at(c.type));
}

int Instance::cell(int school_index, int type_index) const {
  return school_index * num_types() + type_index;
}

int Instance::merit_rank(const ContractId& id) const {
  auto it = merit_.find(id);
  if (it == merit_.end()) {
    throw InvalidInputError("unknown contract id: " + id);
  }
  return it->second;
}

std::vector<ContractId> Instance::merit_sorted(
    std::vector<ContractId> ids) const {
  std::sort(ids.begin(), ids.end(), [this](const auto& a, const auto& b) {
    return merit_rank(a) < merit_rank(b);
  });
  return ids;
}

std::vector<ContractId> Instance::all_ids_by_merit() const {
  std::vector<ContractId> ids;
  ids.reserve(contracts_.size());
  for (const Contract& c : contracts_) ids.push_back(c.id);
  return merit_sorted(std::move(ids));
}

Distribution distribution_of(const std::vector<ContractId>& ids,
                             const Instance& inst) {
  Distribution d = Distribution::zeros(inst.grid_size());
  for (const ContractId& id : ids) {
    ++d[inst.cell_of(id)];
  }
  return d;
}

Distribution distribution_of(const std::set<ContractId>& ids,
                             const Instance& inst) {
  return distribution_of(std::vector<ContractId>(ids.begin(), ids.end()),
                         inst);
}

bool merit_dominates(const std::vector<ContractId>& x,
                     const std::vector<ContractId>& y, const Instance& inst) {
  if (x.size() < y.size()) return false;
  std::vector<ContractId> xs = inst.merit_sorted(x);
  std::vector<ContractId> ys = inst.merit_sorted(y);
  for (size_t i = 0; i < ys.size(); ++i) {
    if (inst.merit_rank(xs[i]) > inst.merit_rank(ys[i])) return false;
  }
  return true;
}

bool merit_dominates(const std::set<ContractId>& x,
                     const std::set<ContractId>& y, const Instance& inst) {
  return merit_dominates(std::vector<ContractId>(x.begin(), x.end()),
                         std::vector<ContractId>(y.begin(), y.end()), inst);
}

}  // namespace divmat
