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

#ifndef DIVMAT_ERRORS_HPP_
#define DIVMAT_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace divmat {

// Malformed or inconsistent inputs (unknown ids, schema violations, ...).
class InvalidInputError : public std::runtime_error {
 public:
  explicit InvalidInputError(const std::string& what)
      : std::runtime_error(what) {}
};

// Enumeration would exceed the configured budget.
class ResourceLimitError : public std::runtime_error {
 public:
  explicit ResourceLimitError(const std::string& what)
      : std::runtime_error(what) {}
};

// A verifier was asked to quantify over a domain it cannot enumerate.
class UnsupportedDomainError : public std::runtime_error {
 public:
  explicit UnsupportedDomainError(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace divmat

#endif  // DIVMAT_ERRORS_HPP_
