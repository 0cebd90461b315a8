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

#ifndef DIVMAT_TESTS_UTIL_HPP_
#define DIVMAT_TESTS_UTIL_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "divmat/core.hpp"

namespace divmat::testutil {

// Deterministic splitmix64; test outcomes must not depend on the platform's
// std::mt19937 distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, n).
  int below(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }

 private:
  std::uint64_t state_;
};

// One school, three students of pairwise distinct types.
inline Instance one_school_xyz(const std::vector<ContractId>& merit_order) {
  std::vector<Contract> contracts = {
      {"x", "c", "sx", "tx"},
      {"y", "c", "sy", "ty"},
      {"z", "c", "sz", "tz"},
  };
  return Instance::with_merit_order({"c"}, {"tx", "ty", "tz"},
                                    std::move(contracts), merit_order);
}

}  // namespace divmat::testutil

#endif  // DIVMAT_TESTS_UTIL_HPP_
