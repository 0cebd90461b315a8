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

#include "divmat/oracle.hpp"

#include <algorithm>

#include "divmat/errors.hpp"

namespace divmat {
namespace {

std::vector<ContractSet> feasible_subsets(const ContractSet& x,
                                          const DiversityIndex& f,
                                          const Instance& inst,
                                          const OracleBudget& budget) {
  if (budget.max_subsets <= 0 || budget.max_domain <= 0) {
    throw InvalidInputError("oracle budget must be positive");
  }
  if (x.size() >= 63 ||
      (1LL << x.size()) > budget.max_subsets) {
    throw ResourceLimitError("oracle subset enumeration over budget: 2^" +
                             std::to_string(x.size()) + " subsets");
  }
  std::vector<ContractSet> out;
  for (ContractSet& y : all_subsets(x)) {
    if (f.domain->contains(distribution_of(y, inst))) {
      out.push_back(std::move(y));
    }
  }
  return out;
}

}  // namespace

DistributionSet brute_force_opt_distributions(const ContractSet& x,
                                              const DiversityIndex& f,
                                              const Instance& inst,
                                              const OracleBudget& budget) {
  Distribution cap = distribution_of(x, inst);
  std::vector<Distribution> points =
      f.domain->enumerate(cap, budget.max_domain);
  std::optional<Rational> best;
  DistributionSet argmax;
  for (const Distribution& xi : points) {
    Rational v = f.eval(xi);
    if (!best || v > *best) {
      best = v;
      argmax.clear();
    }
    if (v == *best) argmax.insert(xi);
  }
  return argmax;
}

BruteChoice brute_force_choice(const ContractSet& x, const DiversityIndex& f,
                               const Instance& inst,
                               const OracleBudget& budget) {
  std::vector<ContractSet> maximizers;
  std::optional<Rational> best;
  for (const ContractSet& y : feasible_subsets(x, f, inst, budget)) {
    Rational v = f.eval(distribution_of(y, inst));
    if (!best || v > *best) {
      best = v;
      maximizers.clear();
    }
    if (v == *best) maximizers.push_back(y);
  }
  for (const ContractSet& y : maximizers) {
    bool dominates_all = true;
    for (const ContractSet& other : maximizers) {
      if (other != y && !merit_dominates(y, other, inst)) {
        dominates_all = false;
        break;
      }
    }
    if (dominates_all) return {y, {}};
  }
  BruteChoice out;
  for (const ContractSet& y : maximizers) {
    bool dominated = false;
    for (const ContractSet& other : maximizers) {
      if (other != y && merit_dominates(other, y, inst)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) out.incomparable.push_back(y);
  }
  return out;
}

std::set<ContractSet> brute_force_pareto(const ContractSet& x,
                                         const DiversityIndex& f,
                                         const Instance& inst,
                                         const OracleBudget& budget) {
  const std::vector<ContractSet> feasible =
      feasible_subsets(x, f, inst, budget);
  std::vector<Rational> values;
  values.reserve(feasible.size());
  for (const ContractSet& y : feasible) {
    values.push_back(f.eval(distribution_of(y, inst)));
  }
  std::set<ContractSet> frontier;
  for (std::size_t i = 0; i < feasible.size(); ++i) {
    bool beaten = false;
    for (std::size_t j = 0; j < feasible.size() && !beaten; ++j) {
      if (j == i || values[j] < values[i]) continue;
      if (feasible[j] != feasible[i] &&
          merit_dominates(feasible[j], feasible[i], inst)) {
        beaten = true;
      }
    }
    if (!beaten) frontier.insert(feasible[i]);
  }
  return frontier;
}

SetFamily build_family(const ContractSet& x, const DiversityIndex& f,
                       const Instance& inst, const OracleBudget& budget) {
  DistributionSet optima = brute_force_opt_distributions(x, f, inst, budget);
  if ((1LL << x.size()) > budget.max_subsets) {
    throw ResourceLimitError("family enumeration over budget");
  }
  SetFamily family;
  family.ground = x;
  for (ContractSet& y : all_subsets(x)) {
    Distribution dist = distribution_of(y, inst);
    for (const Distribution& xi : optima) {
      if (dist.leq(xi)) {
        family.members.insert(std::move(y));
        break;
      }
    }
  }
  return family;
}

}  // namespace divmat
