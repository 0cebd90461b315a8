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

#ifndef DIVMAT_MATROID_HPP_
#define DIVMAT_MATROID_HPP_

#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "divmat/core.hpp"
#include "divmat/rational.hpp"

namespace divmat {

using ContractSet = std::set<ContractId>;

struct SetFamily {
  ContractSet ground;
  std::set<ContractSet> members;
};

struct ChoiceRule {
  std::function<ContractSet(const ContractSet&)> choose;
};

// Verdict of an axiom or property check; `witness` holds the sets (and, for
// element-quantified properties, the singleton of the added contract) behind
// the first failure in canonical enumeration order.
struct FamilyReport {
  bool holds;
  std::string axiom;
  std::vector<ContractSet> witness;
};

enum class BaseAxiomVariant { kB2, kB2Prime, kB2Strong };

// Independence axioms: empty set is a member, members are downward closed,
// and a smaller member can always be extended from a larger one.
FamilyReport is_matroid(const SetFamily& family);

// Nonemptiness plus the requested exchange axiom over the would-be bases.
FamilyReport check_base_axioms(const SetFamily& bases, BaseAxiomVariant variant);

// Repeatedly adds the heaviest contract that stays inside some member of the
// family. Membership is tested as containment in a member, not membership of
// the accumulated set itself; the two differ on non-downward-closed families.
ContractSet greedy(const ContractSet& available, const SetFamily& family,
                   const std::map<ContractId, Rational>& weights);

// C(X' u X) = C(C(X') u X) over all subset pairs of the universe.
FamilyReport check_path_independence(const ChoiceRule& rule,
                                     const ContractSet& universe);

// Larger offer sets never shrink the chosen cardinality.
FamilyReport check_lad(const ChoiceRule& rule, const ContractSet& universe);

// Rejected contracts do not change the outcome.
FamilyReport check_irc(const ChoiceRule& rule, const ContractSet& universe);

// Previously chosen contracts survive the arrival of a new one.
FamilyReport check_substitutes(const ChoiceRule& rule,
                               const ContractSet& universe);

// All subsets of `universe` in canonical (bitmask) order; shared by the
// property checkers and the brute-force oracles.
std::vector<ContractSet> all_subsets(const ContractSet& universe);

}  // namespace divmat

#endif  // DIVMAT_MATROID_HPP_
