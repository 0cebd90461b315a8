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

#include "divmat/errors.hpp"
#include "divmat/solver.hpp"
#include "util.hpp"

namespace divmat {
namespace {

TEST_CASE("ascent reaches a maximal maximizer") {
  DiversityIndex f = example1_index(5);
  // Both (1,0,1) and (0,1,1) attain the maximum 5; the lexicographically
  // first increment is taken on ties.
  CHECK(maximize_diversity(f, Distribution({1, 1, 1})) ==
        Distribution({1, 0, 1}));
  // The cap can cut off the unconstrained optimum.
  CHECK(maximize_diversity(f, Distribution({1, 1, 0})) ==
        Distribution({1, 1, 0}));
}

TEST_CASE("choice follows merit under the anchor") {
  DiversityIndex f = example1_index(5);
  Instance inst = testutil::one_school_xyz({"x", "y", "z"});
  ChoiceResult r = diversity_choice({"x", "y", "z"}, f, inst);
  CHECK(r.chosen == ContractSet{"x", "z"});
  CHECK(r.diversity == Rational(5));
  CHECK(r.anchor == Distribution({1, 0, 1}));
}

TEST_CASE("an anchor swap admits a better-ranked contract") {
  DiversityIndex f = example1_index(5);
  Instance inst = testutil::one_school_xyz({"y", "x", "z"});
  ChoiceResult r = diversity_choice({"x", "y", "z"}, f, inst);
  CHECK(r.chosen == ContractSet{"y", "z"});
  CHECK(r.anchor == Distribution({0, 1, 1}));
}

TEST_CASE("truncation trades diversity for merit") {
  DiversityIndex f = example1_index(6);
  Instance inst = testutil::one_school_xyz({"x", "y", "z"});
  CHECK(diversity_choice({"x", "y", "z"}, f, inst).chosen == ContractSet{"z"});
  ChoiceResult r = diversity_choice_lambda({"x", "y", "z"}, f, Rational(2), inst);
  CHECK(r.chosen == ContractSet{"x", "z"});
  CHECK(r.diversity == Rational(2));
}

TEST_CASE("frontier trace on the three-student market") {
  DiversityIndex f = example1_index(6);
  Instance inst = testutil::one_school_xyz({"x", "y", "z"});
  std::vector<FrontierPoint> frontier = trace_frontier({"x", "y", "z"}, f, inst);
  REQUIRE(frontier.size() == 3);
  CHECK(frontier[0].set == ContractSet{"x", "y"});
  CHECK(frontier[0].diversity == Rational(1));
  CHECK(frontier[0].lambda == Rational(0));
  CHECK(frontier[1].set == ContractSet{"x", "z"});
  CHECK(frontier[1].diversity == Rational(5));
  CHECK(frontier[1].lambda == Rational(2));
  CHECK(frontier[2].set == ContractSet{"z"});
  CHECK(frontier[2].diversity == Rational(6));
  CHECK(frontier[2].lambda == Rational(6));
}

TEST_CASE("frontier trace requires integer values") {
  FeasiblePtr dom = FeasibleSet::box(Distribution({1}));
  DiversityIndex f = tabular(
      {{Distribution({0}), Rational(0)}, {Distribution({1}), Rational(1, 2)}},
      dom);
  std::vector<Contract> contracts = {{"a", "c", "s", "t"}};
  Instance inst = Instance::with_merit_order({"c"}, {"t"}, contracts, {"a"});
  CHECK_THROWS_AS(trace_frontier({"a"}, f, inst), InvalidInputError);
}

TEST_CASE("grid mismatch between index and instance") {
  DiversityIndex f = example5_index();
  Instance inst = testutil::one_school_xyz({"x", "y", "z"});
  CHECK_THROWS_AS(diversity_choice({"x"}, f, inst), InvalidInputError);
}

}  // namespace
}  // namespace divmat
