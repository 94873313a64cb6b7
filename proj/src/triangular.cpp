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

#include "trisum/triangular.hpp"

namespace trisum {

Integer tri(const Integer& n) {
  Integer t = n * (n + 1);
  mpz_divexact_ui(t.get_mpz_t(), t.get_mpz_t(), 2);
  return t;
}

Rational tri_rational(const Rational& x) { return Rational(x * (x + 1) / 2); }

std::optional<Integer> inv_tri(const Integer& t) {
  if (t < 0) return std::nullopt;
  // 8t+1 = (2n+1)^2
  auto root = perfect_square_root(Integer(8 * t + 1));
  if (!root) return std::nullopt;
  return Integer((*root - 1) / 2);
}

bool is_triangular(const Integer& t) { return inv_tri(t).has_value(); }

std::optional<Rational> solve_index(const Rational& value) {
  auto root = rational_sqrt(Rational(8 * value + 1));
  if (!root) return std::nullopt;
  return Rational((*root - 1) / 2);
}

}  // namespace trisum
