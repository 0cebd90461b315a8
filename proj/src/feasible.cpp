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

#include "divmat/feasible.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "divmat/errors.hpp"

namespace divmat {

FeasibleSet::FeasibleSet(Kind kind,
                         std::function<bool(const Distribution&)> member,
                         Distribution bounding_box)
    : kind_(kind), member_(std::move(member)),
      bounding_box_(std::move(bounding_box)) {
  if (!contains(Distribution::zeros(bounding_box_.size()))) {
    throw InvalidInputError("feasible set must contain the zero vector");
  }
}

FeasiblePtr FeasibleSet::total_cap(int num_schools, int num_types, int q) {
  if (q < 0) throw InvalidInputError("total capacity must be >= 0");
  const int size = num_schools * num_types;
  return FeasiblePtr(new FeasibleSet(
      Kind::kTotalCap, [q](const Distribution& xi) { return xi.norm() <= q; },
      Distribution(std::vector<int>(size, q))));
}

FeasiblePtr FeasibleSet::per_school_caps(int num_types, std::vector<int> caps) {
  for (int c : caps) {
    if (c < 0) throw InvalidInputError("school capacity must be >= 0");
  }
  std::vector<int> box;
  for (int c : caps) box.insert(box.end(), num_types, c);
  auto member = [num_types, caps](const Distribution& xi) {
    for (int s = 0; s < static_cast<int>(caps.size()); ++s) {
      int total = 0;
      for (int t = 0; t < num_types; ++t) total += xi[s * num_types + t];
      if (total > caps[s]) return false;
    }
    return true;
  };
  return FeasiblePtr(new FeasibleSet(Kind::kPerSchoolCaps, std::move(member),
                                     Distribution(std::move(box))));
}

FeasiblePtr FeasibleSet::box(Distribution upper) {
  auto member = [upper](const Distribution& xi) { return xi.leq(upper); };
  return FeasiblePtr(
      new FeasibleSet(Kind::kBox, std::move(member), std::move(upper)));
}

FeasiblePtr FeasibleSet::explicit_set(std::vector<Distribution> members) {
  if (members.empty()) {
    throw InvalidInputError("explicit feasible set must be nonempty");
  }
  const int size = members.front().size();
  std::vector<int> box(size, 0);
  for (const Distribution& m : members) {
    if (m.size() != size) {
      throw InvalidInputError("explicit feasible set members on mixed grids");
    }
    for (int i = 0; i < size; ++i) box[i] = std::max(box[i], m[i]);
  }
  std::set<Distribution> index(members.begin(), members.end());
  auto member = [index = std::move(index)](const Distribution& xi) {
    return index.count(xi) != 0;
  };
  return FeasiblePtr(new FeasibleSet(Kind::kExplicit, std::move(member),
                                     Distribution(std::move(box))));
}

FeasiblePtr FeasibleSet::predicate(
    std::function<bool(const Distribution&)> member, Distribution bounding_box) {
  return FeasiblePtr(new FeasibleSet(Kind::kPredicate, std::move(member),
                                     std::move(bounding_box)));
}

bool FeasibleSet::contains(const Distribution& xi) const {
  if (xi.size() != bounding_box_.size()) {
    throw InvalidInputError("distribution grid mismatch with feasible set");
  }
  return member_(xi);
}

std::vector<Distribution> FeasibleSet::enumerate(const Distribution& cap,
                                                 long long limit) const {
  if (cap.size() != bounding_box_.size()) {
    throw InvalidInputError("cap grid mismatch with feasible set");
  }
  std::vector<int> top(cap.size());
  long long points = 1;
  for (int i = 0; i < cap.size(); ++i) {
    top[i] = std::min(cap[i], bounding_box_[i]);
    points *= top[i] + 1;
    if (points > limit) {
      throw ResourceLimitError("feasible-set enumeration over budget");
    }
  }
  std::vector<Distribution> out;
  std::vector<int> cur(cap.size(), 0);
  while (true) {
    Distribution d(cur);
    if (member_(d)) out.push_back(std::move(d));
    int i = static_cast<int>(cur.size()) - 1;
    for (; i >= 0; --i) {
      if (cur[i] < top[i]) {
        ++cur[i];
        std::fill(cur.begin() + i + 1, cur.end(), 0);
        break;
      }
    }
    if (i < 0) break;
  }
  return out;
}

std::vector<Distribution> FeasibleSet::enumerate_all(long long limit) const {
  return enumerate(bounding_box_, limit);
}

}  // namespace divmat
