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

#ifndef TRISUM_FAMILIES_HPP_
#define TRISUM_FAMILIES_HPP_

// Two one-parameter polynomial solutions of the three-sum system, valid for
// every integer u >= 0. Stored expanded over the single variable u. In
// factored form:
//
//   family 1: x = (u+1)(2u+5)               p = 2u^3+12u^2+24u+15
//             y = (u+2)(2u^2+8u+7)          q = (4u^4+28u^3+73u^2+87u+40)/2
//             z = (2u^2+7u+4)(2u^2+7u+7)/2  r = (4u^4+28u^3+71u^2+77u+30)/2
//
//   family 2: x = (u+3)(2u+3)               p = 2u^3+12u^2+24u+16
//             y = (u+1)(2u^2+10u+13)        q = (4u^4+36u^3+121u^2+177u+92)/2
//             z = (2u^2+9u+8)(2u^2+9u+11)/2 r = (u+2)(u+3)(2u+3)(2u+5)/2

#include <array>
#include <vector>

#include "trisum/multipoly.hpp"
#include "trisum/solution.hpp"

namespace trisum {

struct PolyFamily {
  int id;
  MPoly x, y, z, p, q, r;

  std::array<const MPoly*, 6> members() const { return {&x, &y, &z, &p, &q, &r}; }
};

// The polynomial ring Q[u] used by the families.
const Variables& family_variables();

// Throws DomainError unless id is 1 or 2.
PolyFamily family(int id);

// Exact integer sextuple at parameter u >= 0 (DomainError for u < 0 or an
// unknown id).
Solution6 family_eval(int id, const Integer& u);

// Tuple (a*x, a*y, ...) solving f(X)+f(Y)=f(P), ... for f(X) = X(X+a).
struct ScaledSolution {
  Integer a;
  std::vector<Integer> values;  // x,y,z,p,q,r[,s]
};

// f(X) = X(X + a).
Integer scaled_quadratic(const Integer& x, const Integer& a);

// Throws DomainError when a == 0. The scaled relations are re-checked exactly.
ScaledSolution scale_solution(const Solution6& sol, const Integer& a);
ScaledSolution scale_solution(const Solution7& sol, const Integer& a);

}  // namespace trisum

#endif  // TRISUM_FAMILIES_HPP_
