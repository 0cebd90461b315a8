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

#include "divmat/rational.hpp"

#include <cstdlib>

#include "divmat/errors.hpp"

namespace divmat {

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Rational parse_rational(const std::string& s) {
  if (s.empty()) throw InvalidInputError("empty rational literal");
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      return Rational(std::stoll(s));
    }
    long long num = std::stoll(s.substr(0, slash));
    long long den = std::stoll(s.substr(slash + 1));
    if (den == 0) throw InvalidInputError("zero denominator in: " + s);
    return Rational(num, den);
  } catch (const std::invalid_argument&) {
    throw InvalidInputError("malformed rational literal: " + s);
  } catch (const std::out_of_range&) {
    throw InvalidInputError("rational literal out of range: " + s);
  }
}

}  // namespace divmat
