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

#include "divmat/indices.hpp"

#include <algorithm>
#include <memory>
#include <utility>

#include "divmat/errors.hpp"

namespace divmat {

ConcaveSeq::ConcaveSeq(std::vector<Rational> values)
    : values_(std::move(values)) {
  if (values_.empty()) {
    throw InvalidInputError("ConcaveSeq: empty value sequence");
  }
  for (std::size_t k = 2; k < values_.size(); ++k) {
    Rational d1 = values_[k - 1] - values_[k - 2];
    Rational d2 = values_[k] - values_[k - 1];
    if (d2 > d1) {
      throw InvalidInputError("ConcaveSeq: sequence is not concave at index " +
                              std::to_string(k));
    }
  }
}

ConcaveSeq ConcaveSeq::zero(int length) {
  return ConcaveSeq(std::vector<Rational>(length, Rational(0)));
}

ConcaveSeq ConcaveSeq::saturating(int r, int length) {
  std::vector<Rational> v(length);
  for (int k = 0; k < length; ++k) v[k] = Rational(std::min(k, r));
  return ConcaveSeq(std::move(v));
}

Rational ConcaveSeq::at(int k) const {
  if (k < 0 || k >= length()) {
    throw InvalidInputError("ConcaveSeq: index " + std::to_string(k) +
                            " out of range");
  }
  return values_[k];
}

DiversityIndex saturated(const ReserveProfile& reserves, FeasiblePtr domain) {
  const Distribution& box = domain->bounding_box();
  if (static_cast<int>(reserves.r.size()) != box.size()) {
    throw InvalidInputError("saturated: reserve profile size mismatch");
  }
  for (int r : reserves.r) {
    if (r < 0) throw InvalidInputError("saturated: negative reserve");
  }
  auto r = reserves.r;
  return DiversityIndex{
      std::move(domain), [r](const Distribution& xi) {
        long long total = 0;
        for (int i = 0; i < xi.size(); ++i) {
          total += std::min(xi.at(i), r[static_cast<std::size_t>(i)]);
        }
        return Rational(total);
      }};
}

DiversityIndex marginally_decreasing(std::vector<ConcaveSeq> g,
                                     FeasiblePtr domain) {
  const Distribution& box = domain->bounding_box();
  if (static_cast<int>(g.size()) != box.size()) {
    throw InvalidInputError("marginally_decreasing: one sequence per cell required");
  }
  for (int i = 0; i < box.size(); ++i) {
    if (g[static_cast<std::size_t>(i)].length() <= box.at(i)) {
      throw InvalidInputError(
          "marginally_decreasing: sequence shorter than cell range");
    }
  }
  return DiversityIndex{
      std::move(domain), [g = std::move(g)](const Distribution& xi) {
        Rational total(0);
        for (int i = 0; i < xi.size(); ++i) {
          total += g[static_cast<std::size_t>(i)].at(xi.at(i));
        }
        return total;
      }};
}

DiversityIndex university(std::set<int> minority_cells, ConcaveSeq h,
                          std::vector<ConcaveSeq> g, FeasiblePtr domain) {
  const Distribution& box = domain->bounding_box();
  if (static_cast<int>(g.size()) != box.size()) {
    throw InvalidInputError("university: one sequence per cell required");
  }
  long long minority_max = 0;
  for (int cell : minority_cells) {
    if (cell < 0 || cell >= box.size()) {
      throw InvalidInputError("university: minority cell out of range");
    }
    minority_max += box.at(cell);
  }
  if (h.length() <= minority_max) {
    throw InvalidInputError("university: h shorter than minority range");
  }
  for (int i = 0; i < box.size(); ++i) {
    if (g[static_cast<std::size_t>(i)].length() <= box.at(i)) {
      throw InvalidInputError("university: sequence shorter than cell range");
    }
  }
  return DiversityIndex{
      std::move(domain),
      [cells = std::move(minority_cells), h = std::move(h),
       g = std::move(g)](const Distribution& xi) {
        int minority = 0;
        for (int cell : cells) minority += xi.at(cell);
        Rational total = h.at(minority);
        for (int i = 0; i < xi.size(); ++i) {
          total += g[static_cast<std::size_t>(i)].at(xi.at(i));
        }
        return total;
      }};
}

DiversityIndex tabular(std::map<Distribution, Rational> table,
                       FeasiblePtr domain) {
  for (const Distribution& xi : domain->enumerate_all()) {
    if (!table.contains(xi)) {
      throw InvalidInputError("tabular: missing value for " + xi.str());
    }
  }
  auto shared = std::make_shared<const std::map<Distribution, Rational>>(
      std::move(table));
  return DiversityIndex{
      std::move(domain), [shared](const Distribution& xi) {
        auto it = shared->find(xi);
        if (it == shared->end()) {
          throw InvalidInputError("tabular: evaluation outside table at " +
                                  xi.str());
        }
        return it->second;
      }};
}

DiversityIndex truncate(const DiversityIndex& f, const Rational& lambda) {
  if (lambda < Rational(0)) {
    throw InvalidInputError("truncate: negative truncation level");
  }
  return DiversityIndex{f.domain,
                        [eval = f.eval, lambda](const Distribution& xi) {
                          return std::min(eval(xi), lambda);
                        }};
}

DiversityIndex example1_index(int n) {
  if (n < 5) throw InvalidInputError("example1_index: requires n >= 5");
  FeasiblePtr dom = FeasibleSet::explicit_set(
      {Distribution({0, 0, 0}), Distribution({1, 0, 0}), Distribution({0, 1, 0}),
       Distribution({0, 0, 1}), Distribution({1, 1, 0}), Distribution({1, 0, 1}),
       Distribution({0, 1, 1})});
  std::map<Distribution, Rational> table;
  table[Distribution({0, 0, 0})] = Rational(0);
  table[Distribution({1, 0, 0})] = Rational(1);
  table[Distribution({0, 1, 0})] = Rational(1);
  table[Distribution({0, 0, 1})] = Rational(n);
  table[Distribution({1, 1, 0})] = Rational(1);
  table[Distribution({1, 0, 1})] = Rational(5);
  table[Distribution({0, 1, 1})] = Rational(5);
  return tabular(std::move(table), std::move(dom));
}

DiversityIndex example5_index() {
  FeasiblePtr dom = FeasibleSet::box(Distribution({1, 1}));
  std::map<Distribution, Rational> table;
  table[Distribution({0, 0})] = Rational(1);
  table[Distribution({1, 0})] = Rational(0);
  table[Distribution({0, 1})] = Rational(2);
  table[Distribution({1, 1})] = Rational(1);
  return tabular(std::move(table), std::move(dom));
}

DiversityIndex example6_index() {
  FeasiblePtr dom = FeasibleSet::box(Distribution({2}));
  std::map<Distribution, Rational> table;
  table[Distribution({0})] = Rational(0);
  table[Distribution({1})] = Rational(0);
  table[Distribution({2})] = Rational(1);
  return tabular(std::move(table), std::move(dom));
}

}  // namespace divmat
