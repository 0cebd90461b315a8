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

#ifndef DIVMAT_ORACLE_HPP_
#define DIVMAT_ORACLE_HPP_

#include <optional>
#include <vector>

#include "divmat/convexity.hpp"
#include "divmat/core.hpp"
#include "divmat/indices.hpp"
#include "divmat/matroid.hpp"

namespace divmat {

// Brute-force baselines. Deliberately naive: full enumeration with hard
// budgets, no silent truncation.
struct OracleBudget {
  long long max_subsets = 4096;
  long long max_domain = 4096;
};

// Either the unique merit-dominant diversity maximizer, or the mutually
// incomparable maximizers when no dominant one exists (possible when the
// index is not ordinally concave).
struct BruteChoice {
  std::optional<ContractSet> chosen;
  std::vector<ContractSet> incomparable;
};

// Exact argmax set of f over feasible distributions below the cap of X.
DistributionSet brute_force_opt_distributions(const ContractSet& x,
                                              const DiversityIndex& f,
                                              const Instance& inst,
                                              const OracleBudget& budget = {});

BruteChoice brute_force_choice(const ContractSet& x, const DiversityIndex& f,
                               const Instance& inst,
                               const OracleBudget& budget = {});

// Subsets not merit dominated by any distinct weakly-more-diverse subset.
std::set<ContractSet> brute_force_pareto(const ContractSet& x,
                                         const DiversityIndex& f,
                                         const Instance& inst,
                                         const OracleBudget& budget = {});

// Subsets of x whose distribution fits under some optimal distribution.
SetFamily build_family(const ContractSet& x, const DiversityIndex& f,
                       const Instance& inst, const OracleBudget& budget = {});

}  // namespace divmat

#endif  // DIVMAT_ORACLE_HPP_
