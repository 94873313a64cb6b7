// Copyright 2026 The trisum Authors
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

#ifndef TRISUM_LINEAR_HPP_
#define TRISUM_LINEAR_HPP_

#include <optional>
#include <vector>

#include "trisum/exact.hpp"

namespace trisum {

// Dense row-major matrix over Q.
using RationalMatrix = std::vector<std::vector<Rational>>;

// Solves A x = b by Gaussian elimination with exact arithmetic. Returns
// nullopt when A is singular. Throws DomainError on shape mismatch.
std::optional<std::vector<Rational>> solve_linear(RationalMatrix a, std::vector<Rational> b);

Rational determinant(RationalMatrix a);

}  // namespace trisum

#endif  // TRISUM_LINEAR_HPP_
