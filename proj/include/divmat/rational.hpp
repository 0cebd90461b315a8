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

#ifndef DIVMAT_RATIONAL_HPP_
#define DIVMAT_RATIONAL_HPP_

#include <boost/rational.hpp>

#include <string>

namespace divmat {

// Exact arithmetic throughout; the concavity conditions compare values for
// exact equality, which is meaningless under floating point.
using Rational = boost::rational<long long>;

// "p" when integral, "p/q" otherwise.
std::string to_string(const Rational& r);

// Accepts "p" and "p/q".
Rational parse_rational(const std::string& s);

}  // namespace divmat

#endif  // DIVMAT_RATIONAL_HPP_
