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

#ifndef DIVMAT_FEASIBLE_HPP_
#define DIVMAT_FEASIBLE_HPP_

#include <functional>
#include <memory>
#include <vector>

#include "divmat/core.hpp"

namespace divmat {

// The set of feasible distributions. Algorithms consume only membership and
// a finite bounding box; the structured kinds exist for validation and I/O.
// The zero vector is always a member.
class FeasibleSet;
using FeasiblePtr = std::shared_ptr<const FeasibleSet>;

class FeasibleSet {
 public:
  enum class Kind { kTotalCap, kPerSchoolCaps, kBox, kExplicit, kPredicate };

  // { xi : ||xi|| <= q }.
  static FeasiblePtr total_cap(int num_schools, int num_types, int q);
  // { xi : sum_t xi_c^t <= caps[c] for every school c }.
  static FeasiblePtr per_school_caps(int num_types, std::vector<int> caps);
  // { xi : xi <= upper } coordinatewise.
  static FeasiblePtr box(Distribution upper);
  // A finite list of members; must include the zero vector.
  static FeasiblePtr explicit_set(std::vector<Distribution> members);
  // Arbitrary membership function over a finite bounding box.
  static FeasiblePtr predicate(std::function<bool(const Distribution&)> member,
                               Distribution bounding_box);

  Kind kind() const { return kind_; }
  int grid_size() const { return bounding_box_.size(); }

  bool contains(const Distribution& xi) const;

  // Smallest box known to contain the set.
  const Distribution& bounding_box() const { return bounding_box_; }

  // All members xi with 0 <= xi <= cap, in lexicographic order. Throws
  // ResourceLimitError when the candidate box exceeds `limit` points.
  std::vector<Distribution> enumerate(const Distribution& cap,
                                      long long limit = kDefaultEnumLimit) const;

  // Members within the bounding box (the whole set for the structured kinds).
  std::vector<Distribution> enumerate_all(
      long long limit = kDefaultEnumLimit) const;

  static constexpr long long kDefaultEnumLimit = 1 << 22;

 private:
  FeasibleSet(Kind kind, std::function<bool(const Distribution&)> member,
              Distribution bounding_box);

  Kind kind_;
  std::function<bool(const Distribution&)> member_;
  Distribution bounding_box_;
};

}  // namespace divmat

#endif  // DIVMAT_FEASIBLE_HPP_
