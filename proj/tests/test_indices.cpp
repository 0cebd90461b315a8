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
#include "divmat/indices.hpp"

namespace divmat {
namespace {

TEST_CASE("concave sequence validation") {
  CHECK_NOTHROW(ConcaveSeq({Rational(0), Rational(2), Rational(3)}));
  CHECK_THROWS_AS(ConcaveSeq({Rational(0), Rational(1), Rational(3)}),
                  InvalidInputError);
  ConcaveSeq s = ConcaveSeq::saturating(2, 5);
  CHECK(s.at(0) == Rational(0));
  CHECK(s.at(1) == Rational(1));
  CHECK(s.at(4) == Rational(2));
  CHECK_THROWS_AS(s.at(5), InvalidInputError);
}

TEST_CASE("saturated index") {
  FeasiblePtr dom = FeasibleSet::box(Distribution({3, 3}));
  DiversityIndex f = saturated(ReserveProfile{{1, 2}}, dom);
  CHECK(f(Distribution({0, 0})) == Rational(0));
  CHECK(f(Distribution({3, 1})) == Rational(2));
  CHECK(f(Distribution({3, 3})) == Rational(3));
}

TEST_CASE("saturated reproduced by marginally decreasing") {
  FeasiblePtr dom = FeasibleSet::box(Distribution({2, 2}));
  DiversityIndex fs = saturated(ReserveProfile{{1, 1}}, dom);
  DiversityIndex fm = marginally_decreasing(
      {ConcaveSeq::saturating(1, 3), ConcaveSeq::saturating(1, 3)}, dom);
  for (const Distribution& xi : dom->enumerate_all()) {
    CHECK(fs(xi) == fm(xi));
  }
}

TEST_CASE("university index") {
  FeasiblePtr dom = FeasibleSet::box(Distribution({2, 2}));
  // Cell 0 is the minority cell; h counts minorities up to 1.
  DiversityIndex f = university({0}, ConcaveSeq::saturating(1, 5),
                                {ConcaveSeq::zero(3), ConcaveSeq::zero(3)}, dom);
  CHECK(f(Distribution({0, 2})) == Rational(0));
  CHECK(f(Distribution({2, 0})) == Rational(1));
}

TEST_CASE("tabular index must cover the domain") {
  FeasiblePtr dom = FeasibleSet::box(Distribution({1}));
  CHECK_THROWS_AS(tabular({{Distribution({0}), Rational(0)}}, dom),
                  InvalidInputError);
  DiversityIndex f = tabular(
      {{Distribution({0}), Rational(0)}, {Distribution({1}), Rational(7, 2)}},
      dom);
  CHECK(f(Distribution({1})) == Rational(7, 2));
}

TEST_CASE("truncation") {
  DiversityIndex f = example6_index();
  DiversityIndex g = truncate(f, Rational(1, 2));
  CHECK(g(Distribution({2})) == Rational(1, 2));
  CHECK(g(Distribution({1})) == Rational(0));
  CHECK_THROWS_AS(truncate(f, Rational(-1)), InvalidInputError);
}

TEST_CASE("built-in example values") {
  DiversityIndex e1 = example1_index(5);
  CHECK(e1(Distribution({0, 0, 1})) == Rational(5));
  CHECK(e1(Distribution({1, 1, 0})) == Rational(1));
  CHECK_FALSE(e1.domain->contains(Distribution({1, 1, 1})));
  CHECK_THROWS_AS(example1_index(4), InvalidInputError);

  DiversityIndex e5 = example5_index();
  CHECK(e5(Distribution({0, 1})) == Rational(2));
  CHECK(e5(Distribution({1, 0})) == Rational(0));
}

}  // namespace
}  // namespace divmat
