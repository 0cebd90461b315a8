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

#include "divmat/solver.hpp"

#include <optional>
#include <utility>

#include "divmat/errors.hpp"

namespace divmat {
namespace {

void require_grid_match(const DiversityIndex& f, const Instance& inst) {
  if (f.domain->grid_size() != inst.grid_size()) {
    throw InvalidInputError("index domain grid does not match instance grid");
  }
}

}  // namespace

Distribution maximize_diversity(const DiversityIndex& f,
                                const Distribution& cap) {
  Distribution xi = Distribution::zeros(cap.size());
  Rational value = f.eval(xi);
  for (;;) {
    std::optional<Rational> best;
    int best_cell = -1;
    for (int cell = 0; cell < cap.size(); ++cell) {
      if (xi[cell] + 1 > cap[cell]) continue;
      Distribution cand = xi.plus(cell);
      if (!f.domain->contains(cand)) continue;
      Rational v = f.eval(cand);
      if (!best || v > *best) {
        best = v;
        best_cell = cell;
      }
    }
    if (!best || value > *best) return xi;
    xi = xi.plus(best_cell);
    value = *best;
  }
}

ChoiceResult diversity_choice(const ContractSet& x, const DiversityIndex& f,
                              const Instance& inst) {
  require_grid_match(f, inst);
  Distribution cap = distribution_of(x, inst);
  Distribution anchor = maximize_diversity(f, cap);
  const Rational target = f.eval(anchor);

  std::vector<ContractId> by_merit =
      inst.merit_sorted(std::vector<ContractId>(x.begin(), x.end()));
  ContractSet chosen;
  Distribution chosen_dist = Distribution::zeros(cap.size());
  for (;;) {
    bool accepted = false;
    for (const ContractId& id : by_merit) {
      if (chosen.contains(id)) continue;
      const int cell = inst.cell_of(id);
      Distribution with_dist = chosen_dist.plus(cell);
      if (with_dist.leq(anchor)) {
        chosen.insert(id);
        chosen_dist = std::move(with_dist);
        accepted = true;
        break;
      }
      // One-for-one swap of the anchor that keeps it a maximizer below the
      // cap and makes room for the candidate.
      Distribution raised = anchor.plus(cell);
      for (int swap = 0; swap < cap.size() && !accepted; ++swap) {
        if (swap == cell || raised[swap] == 0) continue;
        Distribution swapped = raised.minus(swap);
        if (!with_dist.leq(swapped) || !swapped.leq(cap)) continue;
        if (!f.domain->contains(swapped) || f.eval(swapped) != target) continue;
        anchor = std::move(swapped);
        chosen.insert(id);
        chosen_dist = std::move(with_dist);
        accepted = true;
      }
      if (accepted) break;
    }
    if (!accepted) break;
  }
  Rational diversity = f.domain->contains(chosen_dist)
                           ? f.eval(chosen_dist)
                           : target;
  return {std::move(chosen), std::move(diversity), std::move(anchor)};
}

ChoiceResult diversity_choice_lambda(const ContractSet& x,
                                     const DiversityIndex& f,
                                     const Rational& lambda,
                                     const Instance& inst) {
  return diversity_choice(x, truncate(f, lambda), inst);
}

std::vector<FrontierPoint> trace_frontier(const ContractSet& x,
                                          const DiversityIndex& f,
                                          const Instance& inst) {
  require_grid_match(f, inst);
  for (const Distribution& xi : f.domain->enumerate_all()) {
    if (f.eval(xi).denominator() != 1) {
      throw InvalidInputError(
          "trace requires an integer-valued index; rescale by the common "
          "denominator first");
    }
  }
  const ContractSet untruncated = diversity_choice(x, f, inst).chosen;
  std::vector<FrontierPoint> points;
  Rational lambda(0);
  for (;;) {
    ChoiceResult r = diversity_choice_lambda(x, f, lambda, inst);
    Rational diversity = f.eval(distribution_of(r.chosen, inst));
    bool done = r.chosen == untruncated;
    points.push_back({std::move(r.chosen), diversity, lambda});
    if (done) return points;
    lambda = diversity + Rational(1);
  }
}

}  // namespace divmat
