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

#ifndef DIVMAT_SOLVER_HPP_
#define DIVMAT_SOLVER_HPP_

#include <vector>

#include "divmat/core.hpp"
#include "divmat/indices.hpp"
#include "divmat/matroid.hpp"
#include "divmat/rational.hpp"

namespace divmat {

struct ChoiceResult {
  ContractSet chosen;
  Rational diversity;
  // The maximal diversity-maximizing distribution the selection ran under;
  // xi(chosen) <= anchor.
  Distribution anchor;
};

struct FrontierPoint {
  ContractSet set;
  Rational diversity;
  Rational lambda;
};

// Domain-reduction ascent from the zero vector: while the incumbent value is
// weakly beaten by some single increment staying under `cap` and inside the
// domain, take the best increment (lexicographically first cell on ties).
// Under an ordinally concave index the result is a maximal element of the
// maximizer set; for other indices it is only a local hill-climb.
Distribution maximize_diversity(const DiversityIndex& f,
                                const Distribution& cap);

// Greedy merit scan under an anchor produced by maximize_diversity: the best
// remaining contract is accepted if it fits under the anchor directly or
// after one value-preserving swap of the anchor (lexicographically first swap
// cell on ties).
ChoiceResult diversity_choice(const ContractSet& x, const DiversityIndex& f,
                              const Instance& inst);

// Same rule run on min{f, lambda}; the reported diversity is the truncated
// value.
ChoiceResult diversity_choice_lambda(const ContractSet& x,
                                     const DiversityIndex& f,
                                     const Rational& lambda,
                                     const Instance& inst);

// Iterates the lambda-truncated rule from lambda = 0, stepping lambda to one
// past the attained (untruncated) diversity, until the untruncated outcome is
// reached. Requires an integer-valued index; points come back in ascending
// diversity order.
std::vector<FrontierPoint> trace_frontier(const ContractSet& x,
                                          const DiversityIndex& f,
                                          const Instance& inst);

}  // namespace divmat

#endif  // DIVMAT_SOLVER_HPP_
