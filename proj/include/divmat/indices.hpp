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

#ifndef DIVMAT_INDICES_HPP_
#define DIVMAT_INDICES_HPP_

#include <functional>
#include <map>
#include <set>
#include <vector>

#include "divmat/core.hpp"
#include "divmat/feasible.hpp"
#include "divmat/rational.hpp"

namespace divmat {

// A diversity index: an exact-rational evaluation oracle on the feasible set.
struct DiversityIndex {
  FeasiblePtr domain;
  std::function<Rational(const Distribution&)> eval;

  Rational operator()(const Distribution& xi) const { return eval(xi); }
};

// Univariate concave function as a finite value sequence v_0..v_K; concavity
// (nonincreasing first differences) is validated at construction.
class ConcaveSeq {
 public:
  explicit ConcaveSeq(std::vector<Rational> values);
  static ConcaveSeq zero(int length);
  // min{k, r} for k = 0..length-1.
  static ConcaveSeq saturating(int r, int length);

  Rational at(int k) const;
  int length() const { return static_cast<int>(values_.size()); }

 private:
  std::vector<Rational> values_;
};

// Reserved seats per (school, type) cell, in grid order.
struct ReserveProfile {
  std::vector<int> r;
};

// f^s(xi) = sum over cells of min{xi_cell, r_cell}.
DiversityIndex saturated(const ReserveProfile& reserves, FeasiblePtr domain);

// f^m(xi) = sum over cells of g_cell(xi_cell).
DiversityIndex marginally_decreasing(std::vector<ConcaveSeq> g,
                                     FeasiblePtr domain);

// f^u(xi) = h(total minority count) + sum over cells of g_cell(xi_cell).
// `minority_cells` are the grid cells whose type is a minority type.
DiversityIndex university(std::set<int> minority_cells, ConcaveSeq h,
                          std::vector<ConcaveSeq> g, FeasiblePtr domain);

// Lookup index; `table` must cover exactly the enumerable domain.
DiversityIndex tabular(std::map<Distribution, Rational> table,
                       FeasiblePtr domain);

// min{f, lambda}; lambda must be >= 0. Defined here so index constructors and
// the truncation transform live together.
DiversityIndex truncate(const DiversityIndex& f, const Rational& lambda);

// Built-in worked examples, used by tests and the bundled instance files.
// Three students of distinct types at one school, capacity two; values
// (0, 1, 1, n, 1, 5, 5) on (empty, x, y, z, xy, xz, yz); requires n >= 5.
DiversityIndex example1_index(int n);
// Domain {0,1}^2 with values 1, 0, 2, 1 on (00, 10, 01, 11).
DiversityIndex example5_index();
// Univariate domain {0,1,2} with values 0, 0, 1.
DiversityIndex example6_index();

}  // namespace divmat

#endif  // DIVMAT_INDICES_HPP_
