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

#include "divmat/concavity.hpp"

#include <algorithm>
#include <map>
#include <vector>

namespace divmat {
namespace {

// Cached evaluation over the enumerated domain; avoids re-running eval inside
// the quadratic pair loops.
class Cache {
 public:
  explicit Cache(const DiversityIndex& f) {
    for (const Distribution& xi : f.domain->enumerate_all()) {
      values_.emplace(xi, f.eval(xi));
    }
  }

  const std::vector<Distribution> points() const {
    std::vector<Distribution> out;
    out.reserve(values_.size());
    for (const auto& [xi, v] : values_) out.push_back(xi);
    return out;
  }

  bool in_domain(const Distribution& xi) const { return values_.contains(xi); }
  const Rational& at(const Distribution& xi) const { return values_.at(xi); }

 private:
  std::map<Distribution, Rational> values_;
};

// Directions are encoded as the opposite cell index, or -1 for the empty
// direction (a plain transfer with no compensating cell).
std::vector<int> directions(const Distribution& xi, const Distribution& xt) {
  std::vector<int> out{-1};
  for (int d = 0; d < xi.size(); ++d) {
    if (xi.at(d) < xt.at(d)) out.push_back(d);
  }
  return out;
}

Distribution moved_down(const Distribution& xi, int cell, int dir) {
  Distribution out = xi.minus(cell);
  return dir < 0 ? out : out.plus(dir);
}

Distribution moved_up(const Distribution& xt, int cell, int dir) {
  Distribution out = xt.plus(cell);
  return dir < 0 ? out : out.minus(dir);
}

template <typename PairCheck>
ConcavityVerdict scan_pairs(const DiversityIndex& f, PairCheck check) {
  Cache cache(f);
  const std::vector<Distribution> points = cache.points();
  for (const Distribution& xi : points) {
    for (const Distribution& xt : points) {
      for (int cell = 0; cell < xi.size(); ++cell) {
        if (xi.at(cell) <= xt.at(cell)) continue;
        std::string clause = check(cache, xi, xt, cell);
        if (!clause.empty()) {
          return {false, ConcavityWitness{xi, xt, cell, std::move(clause)}};
        }
      }
    }
  }
  return {true, std::nullopt};
}

ConcavityVerdict check_summed(const DiversityIndex& f, bool allow_empty) {
  return scan_pairs(f, [allow_empty](const Cache& cache, const Distribution& xi,
                                     const Distribution& xt, int cell) {
    Rational base = cache.at(xi) + cache.at(xt);
    for (int dir : directions(xi, xt)) {
      if (dir < 0 && !allow_empty) continue;
      Distribution down = moved_down(xi, cell, dir);
      Distribution up = moved_up(xt, cell, dir);
      if (!cache.in_domain(down) || !cache.in_domain(up)) continue;
      if (cache.at(down) + cache.at(up) >= base) return std::string();
    }
    return std::string("summed exchange inequality");
  });
}

// Side condition of the plus variant: some direction strictly raises the
// value at `anchor` after the transfer. `raise_up` selects which endpoint the
// transfer is applied to.
bool strict_raise_exists(const Cache& cache, const Distribution& xi,
                         const Distribution& xt, int cell, bool raise_up) {
  const Distribution& anchor = raise_up ? xt : xi;
  Rational base = cache.at(anchor);
  for (int dir : directions(xi, xt)) {
    Distribution moved =
        raise_up ? moved_up(xt, cell, dir) : moved_down(xi, cell, dir);
    if (cache.in_domain(moved) && cache.at(moved) > base) return true;
  }
  return false;
}

}  // namespace

ConcavityVerdict check_ordinal_concavity(const DiversityIndex& f) {
  return scan_pairs(f, [](const Cache& cache, const Distribution& xi,
                          const Distribution& xt, int cell) {
    for (int dir : directions(xi, xt)) {
      Distribution down = moved_down(xi, cell, dir);
      Distribution up = moved_up(xt, cell, dir);
      bool down_in = cache.in_domain(down);
      bool up_in = cache.in_domain(up);
      if (down_in && cache.at(down) > cache.at(xi)) return std::string();
      if (up_in && cache.at(up) > cache.at(xt)) return std::string();
      if (down_in && up_in && cache.at(down) == cache.at(xi) &&
          cache.at(up) == cache.at(xt)) {
        return std::string();
      }
    }
    return std::string("no clause satisfied");
  });
}

ConcavityVerdict check_m_concavity(const DiversityIndex& f) {
  return check_summed(f, /*allow_empty=*/false);
}

ConcavityVerdict check_m_natural_concavity(const DiversityIndex& f) {
  return check_summed(f, /*allow_empty=*/true);
}

ConcavityVerdict check_pseudo_mnat(const DiversityIndex& f) {
  return scan_pairs(f, [](const Cache& cache, const Distribution& xi,
                          const Distribution& xt, int cell) {
    Rational base = std::min(cache.at(xi), cache.at(xt));
    for (int dir : directions(xi, xt)) {
      Distribution down = moved_down(xi, cell, dir);
      Distribution up = moved_up(xt, cell, dir);
      if (!cache.in_domain(down) || !cache.in_domain(up)) continue;
      if (base <= std::min(cache.at(down), cache.at(up))) {
        return std::string();
      }
    }
    return std::string("min exchange inequality");
  });
}

ConcavityVerdict check_pseudo_mnat_plus(const DiversityIndex& f) {
  return scan_pairs(f, [](const Cache& cache, const Distribution& xi,
                          const Distribution& xt, int cell) {
    Rational base = std::min(cache.at(xi), cache.at(xt));
    for (int dir : directions(xi, xt)) {
      Distribution down = moved_down(xi, cell, dir);
      Distribution up = moved_up(xt, cell, dir);
      if (!cache.in_domain(down) || !cache.in_domain(up)) continue;
      if (base > std::min(cache.at(down), cache.at(up))) continue;
      if (cache.at(xi) > cache.at(down) && cache.at(xt) == cache.at(up) &&
          !strict_raise_exists(cache, xi, xt, cell, /*raise_up=*/true)) {
        continue;
      }
      if (cache.at(xt) > cache.at(up) && cache.at(xi) == cache.at(down) &&
          !strict_raise_exists(cache, xi, xt, cell, /*raise_up=*/false)) {
        continue;
      }
      return std::string();
    }
    return std::string("min inequality with side conditions");
  });
}

ConcavityVerdict check_semistrict_pseudo_mnat(const DiversityIndex& f) {
  return scan_pairs(f, [](const Cache& cache, const Distribution& xi,
                          const Distribution& xt, int cell) {
    Rational base = std::min(cache.at(xi), cache.at(xt));
    for (int dir : directions(xi, xt)) {
      Distribution down = moved_down(xi, cell, dir);
      Distribution up = moved_up(xt, cell, dir);
      if (!cache.in_domain(down) || !cache.in_domain(up)) continue;
      Rational moved = std::min(cache.at(down), cache.at(up));
      bool need_strict = cache.at(xi) != cache.at(xt) && down != xt;
      if (need_strict ? base < moved : base <= moved) return std::string();
    }
    return std::string("semistrict min inequality");
  });
}

ConcavityVerdict check_monotone(const DiversityIndex& f) {
  Cache cache(f);
  const std::vector<Distribution> points = cache.points();
  for (const Distribution& xi : points) {
    for (const Distribution& xt : points) {
      if (xt.leq(xi) && cache.at(xi) < cache.at(xt)) {
        return {false, ConcavityWitness{xi, xt, -1, "monotonicity"}};
      }
    }
  }
  return {true, std::nullopt};
}

}  // namespace divmat
