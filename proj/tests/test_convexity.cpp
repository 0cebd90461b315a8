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

#include "divmat/convexity.hpp"
#include "divmat/errors.hpp"
#include "divmat/feasible.hpp"

namespace divmat {
namespace {

DistributionSet norm_slice(int size, int total) {
  DistributionSet out;
  for (const Distribution& xi :
       FeasibleSet::total_cap(1, size, total)->enumerate_all()) {
    if (xi.norm() == total) out.insert(xi);
  }
  return out;
}

TEST_CASE("norm slices are M-convex") {
  CHECK(is_m_convex(norm_slice(3, 2)).holds);
  CHECK(is_m_convex({Distribution({1, 0, 1}), Distribution({0, 1, 1})}).holds);
}

TEST_CASE("sets with a norm gap are not M-convex") {
  DistributionSet s{Distribution({0, 0}), Distribution({1, 1})};
  ConvexityReport r = is_m_convex(s);
  CHECK_FALSE(r.holds);
  REQUIRE(r.witness.has_value());
  CHECK(r.witness->xi == Distribution({1, 1}));
  CHECK(r.witness->xi_tilde == Distribution({0, 0}));
}

TEST_CASE("simplex is M-natural-convex but not M-convex") {
  DistributionSet s;
  for (const Distribution& xi :
       FeasibleSet::total_cap(1, 2, 2)->enumerate_all()) {
    s.insert(xi);
  }
  CHECK(is_m_natural_convex(s).holds);
  CHECK_FALSE(is_m_convex(s).holds);
}

TEST_CASE("M-convexity implies M-natural-convexity") {
  DistributionSet s = norm_slice(4, 3);
  CHECK(is_m_convex(s).holds);
  CHECK(is_m_natural_convex(s).holds);
}

TEST_CASE("a failing M-natural example") {
  // (1,1) and (0,0) with neither (1,0) nor (0,1): the one-sided transfer from
  // the excess cell leaves the set.
  DistributionSet s{Distribution({0, 0}), Distribution({1, 1})};
  CHECK_FALSE(is_m_natural_convex(s).holds);
}

TEST_CASE("maximal members of an M-natural-convex set form an M-convex set") {
  DistributionSet s;
  for (const Distribution& xi :
       FeasibleSet::total_cap(1, 3, 2)->enumerate_all()) {
    s.insert(xi);
  }
  REQUIRE(is_m_natural_convex(s).holds);
  DistributionSet maximal = maximal_distributions(s);
  CHECK(maximal == norm_slice(3, 2));
  CHECK(is_m_convex(maximal).holds);
}

TEST_CASE("empty input is rejected") {
  CHECK_THROWS_AS(is_m_convex({}), InvalidInputError);
}

}  // namespace
}  // namespace divmat
