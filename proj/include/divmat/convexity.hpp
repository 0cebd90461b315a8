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

#ifndef DIVMAT_CONVEXITY_HPP_
#define DIVMAT_CONVEXITY_HPP_

#include <optional>
#include <set>

#include "divmat/core.hpp"

namespace divmat {

using DistributionSet = std::set<Distribution>;

struct ConvexityWitness {
  Distribution xi;
  Distribution xi_tilde;
  int cell;
};

struct ConvexityReport {
  bool holds;
  std::optional<ConvexityWitness> witness;
};

// Exchange axiom: for all xi, xi~ in the set and every cell where xi exceeds
// xi~, some opposite cell admits a two-sided swap that stays inside the set.
ConvexityReport is_m_convex(const DistributionSet& xs);

// Same, with the empty direction (plain one-sided transfer) also allowed.
// Cross-validated internally against the norm-split characterization; the two
// routes disagreeing is a logic error.
ConvexityReport is_m_natural_convex(const DistributionSet& xs);

// Members with no strictly larger member (coordinatewise).
DistributionSet maximal_distributions(const DistributionSet& xs);

}  // namespace divmat

#endif  // DIVMAT_CONVEXITY_HPP_
