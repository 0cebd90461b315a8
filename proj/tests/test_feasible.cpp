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
#include "divmat/feasible.hpp"

namespace divmat {
namespace {

TEST_CASE("total capacity set") {
  FeasiblePtr s = FeasibleSet::total_cap(1, 2, 2);
  CHECK(s->contains(Distribution({1, 1})));
  CHECK(s->contains(Distribution({0, 2})));
  CHECK_FALSE(s->contains(Distribution({2, 1})));
  CHECK(s->bounding_box() == Distribution({2, 2}));
  CHECK(s->enumerate_all().size() == 6);
}

TEST_CASE("per-school capacity set") {
  // Two schools, two types, capacities 2 and 1.
  FeasiblePtr s = FeasibleSet::per_school_caps(2, {2, 1});
  CHECK(s->contains(Distribution({1, 1, 1, 0})));
  CHECK_FALSE(s->contains(Distribution({1, 1, 1, 1})));
  CHECK(s->bounding_box() == Distribution({2, 2, 1, 1}));
}

TEST_CASE("box and explicit sets") {
  FeasiblePtr b = FeasibleSet::box(Distribution({1, 2}));
  CHECK(b->enumerate_all().size() == 6);
  CHECK_FALSE(b->contains(Distribution({2, 0})));

  FeasiblePtr e = FeasibleSet::explicit_set(
      {Distribution({0, 0}), Distribution({1, 1})});
  CHECK(e->contains(Distribution({1, 1})));
  CHECK_FALSE(e->contains(Distribution({1, 0})));
  CHECK_THROWS_AS(FeasibleSet::explicit_set({Distribution({1, 0})}),
                  InvalidInputError);
}

TEST_CASE("enumeration clips to the cap and respects the budget") {
  FeasiblePtr s = FeasibleSet::total_cap(1, 2, 5);
  auto pts = s->enumerate(Distribution({1, 1}));
  CHECK(pts == std::vector<Distribution>{
                   Distribution({0, 0}), Distribution({0, 1}),
                   Distribution({1, 0}), Distribution({1, 1})});
  FeasiblePtr big = FeasibleSet::box(Distribution({1000, 1000, 1000}));
  CHECK_THROWS_AS(big->enumerate_all(1000), ResourceLimitError);
}

TEST_CASE("grid mismatch is rejected") {
  FeasiblePtr s = FeasibleSet::box(Distribution({1, 1}));
  CHECK_THROWS_AS(s->contains(Distribution({1, 1, 1})), InvalidInputError);
}

}  // namespace
}  // namespace divmat
