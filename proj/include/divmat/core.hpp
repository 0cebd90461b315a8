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

#ifndef DIVMAT_CORE_HPP_
#define DIVMAT_CORE_HPP_

#include <compare>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

namespace divmat {

using ContractId = std::string;

// Integer count vector over the (school, type) grid. Cells are ordered
// lexicographically: cell = school_index * |types| + type_index.
class Distribution {
 public:
  Distribution() = default;
  explicit Distribution(std::vector<int> counts);
  static Distribution zeros(int size);

  int size() const { return static_cast<int>(counts_.size()); }
  int operator[](int cell) const { return counts_[cell]; }
  int at(int cell) const { return counts_.at(static_cast<std::size_t>(cell)); }
  int& operator[](int cell) { return counts_[cell]; }
  const std::vector<int>& counts() const { return counts_; }

  // Sum of coordinates.
  int norm() const;

  Distribution plus(int cell) const;
  Distribution minus(int cell) const;

  // Coordinatewise comparison (partial order).
  bool leq(const Distribution& other) const;

  // Lexicographic: used everywhere a deterministic total order is needed.
  auto operator<=>(const Distribution&) const = default;

  std::string str() const;

 private:
  std::vector<int> counts_;
};

struct Contract {
  ContractId id;
  std::string school;
  std::string student;
  std::string type;
};

// Schools, types, contracts, and a strict merit ranking over the contracts.
// Immutable after construction.
class Instance {
 public:
  // `merit_ranks` maps every contract id to a position; positions must be a
  // permutation of 0..|contracts|-1 (0 = best). Throws InvalidInputError on
  // any inconsistency.
  Instance(std::vector<std::string> schools, std::vector<std::string> types,
           std::vector<Contract> contracts,
           std::unordered_map<ContractId, int> merit_ranks);

  // Convenience: merit given as an ordered id list, best first.
  static Instance with_merit_order(std::vector<std::string> schools,
                                   std::vector<std::string> types,
                                   std::vector<Contract> contracts,
                                   const std::vector<ContractId>& merit_order);

  const std::vector<std::string>& schools() const { return schools_; }
  const std::vector<std::string>& types() const { return types_; }
  const std::vector<Contract>& contracts() const { return contracts_; }

  int grid_size() const {
    return static_cast<int>(schools_.size() * types_.size());
  }
  int num_types() const { return static_cast<int>(types_.size()); }

  bool has_contract(const ContractId& id) const;
  const Contract& contract(const ContractId& id) const;

  // Grid cell of a contract: school index * |types| + type index.
  int cell_of(const ContractId& id) const;
  int cell(int school_index, int type_index) const;

  int merit_rank(const ContractId& id) const;

  // Returns ids sorted best-first by merit (the canonical set representation).
  std::vector<ContractId> merit_sorted(std::vector<ContractId> ids) const;

  // All contract ids in merit order.
  std::vector<ContractId> all_ids_by_merit() const;

 private:
  std::vector<std::string> schools_;
  std::vector<std::string> types_;
  std::vector<Contract> contracts_;
  std::unordered_map<ContractId, int> merit_;
  std::unordered_map<std::string, int> school_index_;
  std::unordered_map<std::string, int> type_index_;
  std::unordered_map<ContractId, int> contract_index_;
};

// Distribution induced by a set of contracts.
Distribution distribution_of(const std::vector<ContractId>& ids,
                             const Instance& inst);
Distribution distribution_of(const std::set<ContractId>& ids,
                             const Instance& inst);

inline int norm(const Distribution& xi) { return xi.norm(); }

// |X| >= |Y| and, with both sets sorted best-first, the i-th element of X
// weakly outranks the i-th element of Y. A partial order on contract sets.
bool merit_dominates(const std::vector<ContractId>& x,
                     const std::vector<ContractId>& y, const Instance& inst);
bool merit_dominates(const std::set<ContractId>& x,
                     const std::set<ContractId>& y, const Instance& inst);

}  // namespace divmat

#endif  // DIVMAT_CORE_HPP_
