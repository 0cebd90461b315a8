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

#include <doctest.h>

#include <algorithm>

#include "divmat/errors.hpp"
#include "divmat/matroid.hpp"

namespace divmat {
namespace {

SetFamily uniform_matroid(const ContractSet& ground, std::size_t rank) {
  SetFamily family{ground, {}};
  for (const ContractSet& s : all_subsets(ground)) {
    if (s.size() <= rank) family.members.insert(s);
  }
  return family;
}

TEST_CASE("independence axioms") {
  ContractSet ground{"a", "b", "c"};
  CHECK(is_matroid(uniform_matroid(ground, 2)).holds);

  SetFamily no_empty{ground, {{"a"}}};
  CHECK(is_matroid(no_empty).axiom == "I1");

  SetFamily not_downward{ground, {{}, {"a", "b"}}};
  CHECK(is_matroid(not_downward).axiom == "I2");

  // Two maximal members of different sizes: augmentation must fail.
  SetFamily no_augment{ground, {{}, {"a"}, {"b"}, {"c"}, {"b", "c"}}};
  FamilyReport r = is_matroid(no_augment);
  CHECK(r.axiom == "I3");
  REQUIRE(r.witness.size() == 2);
  CHECK(r.witness[0] == ContractSet{"a"});
}

TEST_CASE("base exchange axioms") {
  ContractSet ground{"a", "b", "c"};
  SetFamily bases{ground, {{"a", "b"}, {"a", "c"}, {"b", "c"}}};
  CHECK(check_base_axioms(bases, BaseAxiomVariant::kB2).holds);
  CHECK(check_base_axioms(bases, BaseAxiomVariant::kB2Prime).holds);
  CHECK(check_base_axioms(bases, BaseAxiomVariant::kB2Strong).holds);

  // A size gap breaks every exchange variant: the smaller set has nothing
  // to give up.
  SetFamily gap{ground, {{"a"}, {"b", "c"}}};
  CHECK_FALSE(check_base_axioms(gap, BaseAxiomVariant::kB2).holds);
  CHECK_FALSE(check_base_axioms(gap, BaseAxiomVariant::kB2Prime).holds);
  CHECK_FALSE(check_base_axioms({ground, {}}, BaseAxiomVariant::kB2).holds);
}

TEST_CASE("B2-prime is pointwise weaker but globally equivalent to B2") {
  // Exhaustive over every nonempty family of subsets of a 3-element ground
  // set; mixed member sizes exercise the containment relaxation.
  ContractSet ground{"a", "b", "c"};
  std::vector<ContractSet> pool = all_subsets(ground);
  REQUIRE(pool.size() == 8);
  for (std::uint32_t mask = 1; mask < (1u << 8); ++mask) {
    SetFamily family{ground, {}};
    for (int i = 0; i < 8; ++i) {
      if (mask & (1u << i)) family.members.insert(pool[i]);
    }
    CHECK(check_base_axioms(family, BaseAxiomVariant::kB2).holds ==
          check_base_axioms(family, BaseAxiomVariant::kB2Prime).holds);
  }
}

TEST_CASE("greedy picks by weight under containment") {
  ContractSet ground{"a", "b", "c"};
  SetFamily family = uniform_matroid(ground, 2);
  std::map<ContractId, Rational> w{
      {"a", Rational(1)}, {"b", Rational(5)}, {"c", Rational(3)}};
  CHECK(greedy(ground, family, w) == ContractSet{"b", "c"});
  CHECK(greedy({"a", "c"}, family, w) == ContractSet{"a", "c"});

  std::map<ContractId, Rational> dup{
      {"a", Rational(1)}, {"b", Rational(1)}, {"c", Rational(3)}};
  CHECK_THROWS_AS(greedy(ground, family, dup), InvalidInputError);
}

TEST_CASE("greedy membership is containment in some member") {
  // {a,b} itself is not listed, but both of its extensions by one element
  // from {a,b,c} are subsets of the listed member, so greedy may pass
  // through it.
  ContractSet ground{"a", "b", "c"};
  SetFamily family{ground, {{"a", "b", "c"}}};
  std::map<ContractId, Rational> w{
      {"a", Rational(3)}, {"b", Rational(2)}, {"c", Rational(1)}};
  CHECK(greedy(ground, family, w) == ContractSet{"a", "b", "c"});
}

TEST_CASE("choice-rule axioms on a quota rule") {
  ContractSet universe{"a", "b", "c"};
  // Pick the alphabetically first two: path independent and LAD.
  ChoiceRule top2{[](const ContractSet& x) {
    ContractSet out;
    for (const ContractId& id : x) {
      if (out.size() == 2) break;
      out.insert(id);
    }
    return out;
  }};
  CHECK(check_path_independence(top2, universe).holds);
  CHECK(check_lad(top2, universe).holds);
  CHECK(check_irc(top2, universe).holds);
  CHECK(check_substitutes(top2, universe).holds);

  // Prefers c over b in a pairwise offer, against the usual order: the
  // rejected contract b changes the outcome elsewhere.
  ChoiceRule flaky{[](const ContractSet& x) {
    if (x == ContractSet{"b", "c"}) return ContractSet{"c"};
    ContractSet out;
    for (const ContractId& id : x) {
      if (out.size() == 2) break;
      out.insert(id);
    }
    return out;
  }};
  CHECK_FALSE(check_path_independence(flaky, universe).holds);
}

TEST_CASE("path independence is equivalent to IRC plus substitutes") {
  // Exhaustive over all choice rules on a 2-element universe that satisfy
  // C(X) subseteq X; 3^2 * ... small enough to enumerate directly.
  ContractSet universe{"a", "b"};
  std::vector<ContractSet> subsets = all_subsets(universe);
  std::vector<std::vector<ContractSet>> options;
  for (const ContractSet& x : subsets) options.push_back(all_subsets(x));
  std::vector<std::size_t> pick(subsets.size(), 0);
  int checked = 0;
  for (;;) {
    std::map<ContractSet, ContractSet> table;
    for (std::size_t i = 0; i < subsets.size(); ++i) {
      table[subsets[i]] = options[i][pick[i]];
    }
    ChoiceRule rule{[table](const ContractSet& x) { return table.at(x); }};
    bool pi = check_path_independence(rule, universe).holds;
    bool irc = check_irc(rule, universe).holds;
    bool sub = check_substitutes(rule, universe).holds;
    CHECK(pi == (irc && sub));
    ++checked;
    std::size_t i = 0;
    while (i < pick.size() && ++pick[i] == options[i].size()) pick[i++] = 0;
    if (i == pick.size()) break;
  }
  CHECK(checked == 1 * 2 * 2 * 4);
}

TEST_CASE("subset enumeration is bounded") {
  ContractSet big;
  for (int i = 0; i < 26; ++i) big.insert(std::string(1, 'a' + i));
  CHECK_THROWS_AS(all_subsets(big), ResourceLimitError);
}

}  // namespace
}  // namespace divmat
