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

#ifndef DIVMAT_CONCAVITY_HPP_
#define DIVMAT_CONCAVITY_HPP_

#include <optional>
#include <string>

#include "divmat/core.hpp"
#include "divmat/indices.hpp"

namespace divmat {

struct ConcavityWitness {
  Distribution xi;
  Distribution xi_tilde;
  int cell;
  std::string clause;
};

struct ConcavityVerdict {
  bool holds;
  std::optional<ConcavityWitness> witness;
};

// All checkers enumerate the full feasible domain, iterate pairs in canonical
// order, and return the first failing triple. Perturbed points only count
// when they lie in the domain.

// For every excess cell some direction strictly improves one side of the pair
// or leaves both values unchanged.
ConcavityVerdict check_ordinal_concavity(const DiversityIndex& f);

// Summed-value exchange inequalities; the natural variant also allows the
// plain one-sided transfer.
ConcavityVerdict check_m_concavity(const DiversityIndex& f);
ConcavityVerdict check_m_natural_concavity(const DiversityIndex& f);

// Min-value exchange inequality.
ConcavityVerdict check_pseudo_mnat(const DiversityIndex& f);

// Min-value inequality plus the two side conditions: when the higher value
// drops while the lower one ties, some other direction must strictly raise
// the lower value.
ConcavityVerdict check_pseudo_mnat_plus(const DiversityIndex& f);

// Min-value inequality, strict whenever the two values differ and the moved
// point is not already the other endpoint.
ConcavityVerdict check_semistrict_pseudo_mnat(const DiversityIndex& f);

ConcavityVerdict check_monotone(const DiversityIndex& f);

}  // namespace divmat

#endif  // DIVMAT_CONCAVITY_HPP_
