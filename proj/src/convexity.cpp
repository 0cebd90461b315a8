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

#include "divmat/convexity.hpp"

#include <cassert>
#include <cstdlib>

#include "divmat/errors.hpp"

namespace divmat {
namespace {

void require_nonempty(const DistributionSet& xs) {
  if (xs.empty()) {
    throw InvalidInputError("convexity check on empty distribution set");
  }
}

bool exchange_exists(const DistributionSet& xs, const Distribution& xi,
                     const Distribution& xi_tilde, int cell,
                     bool allow_empty_direction) {
  if (allow_empty_direction && xs.contains(xi.minus(cell)) &&
      xs.contains(xi_tilde.plus(cell))) {
    return true;
  }
  for (int other = 0; other < xi.size(); ++other) {
    if (xi.at(other) >= xi_tilde.at(other)) continue;
    if (xs.contains(xi.minus(cell).plus(other)) &&
        xs.contains(xi_tilde.plus(cell).minus(other))) {
      return true;
    }
  }
  return false;
}

ConvexityReport check_exchange(const DistributionSet& xs,
                               bool allow_empty_direction) {
  require_nonempty(xs);
  for (const Distribution& xi : xs) {
    for (const Distribution& xi_tilde : xs) {
      for (int cell = 0; cell < xi.size(); ++cell) {
        if (xi.at(cell) <= xi_tilde.at(cell)) continue;
        if (!exchange_exists(xs, xi, xi_tilde, cell, allow_empty_direction)) {
          return {false, ConvexityWitness{xi, xi_tilde, cell}};
        }
      }
    }
  }
  return {true, std::nullopt};
}

// Norm-split form: pairs with unequal norms need only a one-sided transfer in
// some excess cell; pairs with equal norms need a two-sided swap in every
// excess cell.
bool norm_split_holds(const DistributionSet& xs) {
  for (const Distribution& xi : xs) {
    for (const Distribution& xi_tilde : xs) {
      if (norm(xi) > norm(xi_tilde)) {
        bool found = false;
        for (int cell = 0; cell < xi.size() && !found; ++cell) {
          if (xi.at(cell) > xi_tilde.at(cell) && xs.contains(xi.minus(cell)) &&
              xs.contains(xi_tilde.plus(cell))) {
            found = true;
          }
        }
        if (!found) return false;
      } else if (norm(xi) == norm(xi_tilde)) {
        for (int cell = 0; cell < xi.size(); ++cell) {
          if (xi.at(cell) <= xi_tilde.at(cell)) continue;
          if (!exchange_exists(xs, xi, xi_tilde, cell,
                               /*allow_empty_direction=*/false)) {
            return false;
          }
        }
      }
    }
  }
  return true;
}

}  // namespace

ConvexityReport is_m_convex(const DistributionSet& xs) {
  return check_exchange(xs, /*allow_empty_direction=*/false);
}

ConvexityReport is_m_natural_convex(const DistributionSet& xs) {
  ConvexityReport report = check_exchange(xs, /*allow_empty_direction=*/true);
  if (report.holds != norm_split_holds(xs)) {
    assert(false && "M-natural convexity routes disagree");
    std::abort();
  }
  return report;
}

DistributionSet maximal_distributions(const DistributionSet& xs) {
  require_nonempty(xs);
  DistributionSet out;
  for (const Distribution& xi : xs) {
    bool dominated = false;
    for (const Distribution& other : xs) {
      if (xi.leq(other) && xi != other) {
        dominated = true;
        break;
      }
    }
    if (!dominated) out.insert(xi);
  }
  return out;
}

}  // namespace divmat
