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

#include "divmat/matroid.hpp"

#include <algorithm>
#include <cstdint>

#include "divmat/errors.hpp"

namespace divmat {
namespace {

bool is_subset(const ContractSet& a, const ContractSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

ContractSet set_union(const ContractSet& a, const ContractSet& b) {
  ContractSet out = a;
  out.insert(b.begin(), b.end());
  return out;
}

ContractSet with(const ContractSet& s, const ContractId& x) {
  ContractSet out = s;
  out.insert(x);
  return out;
}

ContractSet without(const ContractSet& s, const ContractId& x) {
  ContractSet out = s;
  out.erase(x);
  return out;
}

bool contained_in_some_member(const SetFamily& family, const ContractSet& s) {
  for (const ContractSet& member : family.members) {
    if (is_subset(s, member)) return true;
  }
  return false;
}

}  // namespace

std::vector<ContractSet> all_subsets(const ContractSet& universe) {
  std::vector<ContractId> ids(universe.begin(), universe.end());
  if (ids.size() > 25) {
    throw ResourceLimitError("subset enumeration over " +
                             std::to_string(ids.size()) + " elements");
  }
  std::vector<ContractSet> out;
  out.reserve(std::size_t{1} << ids.size());
  for (std::uint32_t mask = 0; mask < (1u << ids.size()); ++mask) {
    ContractSet s;
    for (std::size_t i = 0; i < ids.size(); ++i) {
      if (mask & (1u << i)) s.insert(ids[i]);
    }
    out.push_back(std::move(s));
  }
  return out;
}

FamilyReport is_matroid(const SetFamily& family) {
  if (!family.members.contains(ContractSet{})) {
    return {false, "I1", {}};
  }
  for (const ContractSet& member : family.members) {
    for (const ContractId& x : member) {
      ContractSet sub = without(member, x);
      if (!family.members.contains(sub)) {
        return {false, "I2", {member, sub}};
      }
    }
  }
  for (const ContractSet& small : family.members) {
    for (const ContractSet& big : family.members) {
      if (big.size() <= small.size()) continue;
      bool extended = false;
      for (const ContractId& x : big) {
        if (!small.contains(x) && family.members.contains(with(small, x))) {
          extended = true;
          break;
        }
      }
      if (!extended) return {false, "I3", {small, big}};
    }
  }
  return {true, "", {}};
}

FamilyReport check_base_axioms(const SetFamily& bases,
                               BaseAxiomVariant variant) {
  if (bases.members.empty()) {
    return {false, "B1", {}};
  }
  for (const ContractSet& x1_set : bases.members) {
    for (const ContractSet& x2_set : bases.members) {
      for (const ContractId& x1 : x1_set) {
        if (x2_set.contains(x1)) continue;
        bool ok = false;
        for (const ContractId& x2 : x2_set) {
          if (x1_set.contains(x2)) continue;
          ContractSet swapped = with(without(x1_set, x1), x2);
          switch (variant) {
            case BaseAxiomVariant::kB2:
              ok = bases.members.contains(swapped);
              break;
            case BaseAxiomVariant::kB2Prime:
              ok = contained_in_some_member(bases, swapped);
              break;
            case BaseAxiomVariant::kB2Strong:
              ok = bases.members.contains(swapped) &&
                   bases.members.contains(with(without(x2_set, x2), x1));
              break;
          }
          if (ok) break;
        }
        if (!ok) {
          const char* name = variant == BaseAxiomVariant::kB2        ? "B2"
                             : variant == BaseAxiomVariant::kB2Prime ? "B2'"
                                                                     : "B2strong";
          return {false, name, {x1_set, x2_set, {x1}}};
        }
      }
    }
  }
  return {true, "", {}};
}

ContractSet greedy(const ContractSet& available, const SetFamily& family,
                   const std::map<ContractId, Rational>& weights) {
  std::set<Rational> seen;
  for (const ContractId& x : available) {
    auto it = weights.find(x);
    if (it == weights.end()) {
      throw InvalidInputError("greedy: missing weight for contract " + x);
    }
    if (it->second < Rational(0)) {
      throw InvalidInputError("greedy: negative weight");
    }
    if (!seen.insert(it->second).second) {
      throw InvalidInputError("greedy: duplicate weights");
    }
  }
  ContractSet chosen;
  for (;;) {
    bool found = false;
    ContractId best;
    Rational best_weight(0);
    for (const ContractId& x : available) {
      if (chosen.contains(x)) continue;
      if (!contained_in_some_member(family, with(chosen, x))) continue;
      const Rational& w = weights.at(x);
      if (!found || w > best_weight) {
        found = true;
        best = x;
        best_weight = w;
      }
    }
    if (!found) return chosen;
    chosen.insert(best);
  }
}

FamilyReport check_path_independence(const ChoiceRule& rule,
                                     const ContractSet& universe) {
  const std::vector<ContractSet> subsets = all_subsets(universe);
  for (const ContractSet& xp : subsets) {
    ContractSet cxp = rule.choose(xp);
    for (const ContractSet& x : subsets) {
      if (rule.choose(set_union(xp, x)) != rule.choose(set_union(cxp, x))) {
        return {false, "path independence", {xp, x}};
      }
    }
  }
  return {true, "", {}};
}

FamilyReport check_lad(const ChoiceRule& rule, const ContractSet& universe) {
  const std::vector<ContractSet> subsets = all_subsets(universe);
  for (const ContractSet& x : subsets) {
    std::size_t chosen = rule.choose(x).size();
    for (const ContractSet& xp : subsets) {
      if (!is_subset(x, xp)) continue;
      if (rule.choose(xp).size() < chosen) {
        return {false, "law of aggregate demand", {xp, x}};
      }
    }
  }
  return {true, "", {}};
}

FamilyReport check_irc(const ChoiceRule& rule, const ContractSet& universe) {
  for (const ContractSet& x : all_subsets(universe)) {
    for (const ContractId& extra : universe) {
      if (x.contains(extra)) continue;
      ContractSet bigger = rule.choose(with(x, extra));
      if (!bigger.contains(extra) && bigger != rule.choose(x)) {
        return {false, "irrelevance of rejected contracts", {x, {extra}}};
      }
    }
  }
  return {true, "", {}};
}

FamilyReport check_substitutes(const ChoiceRule& rule,
                               const ContractSet& universe) {
  for (const ContractSet& x : all_subsets(universe)) {
    ContractSet cx = rule.choose(x);
    for (const ContractId& extra : universe) {
      if (x.contains(extra)) continue;
      for (const ContractId& kept : rule.choose(with(x, extra))) {
        if (kept != extra && x.contains(kept) && !cx.contains(kept)) {
          return {false, "substitutes", {x, {extra}}};
        }
      }
    }
  }
  return {true, "", {}};
}

}  // namespace divmat
