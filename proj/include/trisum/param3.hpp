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

#ifndef TRISUM_PARAM3_HPP_
#define TRISUM_PARAM3_HPP_

// Three-parameter rational solution of the three-sum system.
//
// Writing y = u(p-x), z = v(q-y), x = w(r-z) turns each quadratic equation
// t_a + t_b = t_c into the linear pair
//   b = u(c - a),  u(b + 1) = c + a + 1
// so for fixed (u,v,w) the six unknowns solve a 6x6 linear system whose
// determinant is
//   D(u,v,w) = (1-u^2)(v^2-1)(w^2-1) + 8uvw.

#include <array>

#include "trisum/linear.hpp"
#include "trisum/multipoly.hpp"
#include "trisum/solution.hpp"

namespace trisum {

// Q[u,v,w].
const Variables& param_variables();

struct ParamSolution {
  RatFunc x, y, z, p, q, r;
  MPoly denominator;  // D(u,v,w)

  std::array<const RatFunc*, 6> members() const { return {&x, &y, &z, &p, &q, &r}; }
};

// Closed forms over Q(u,v,w); p = (u x + y)/u, q = (v y + z)/v, r = (w z + x)/w.
const ParamSolution& closed_form_symbolic();

Rational param_denominator(const Rational& u, const Rational& v, const Rational& w);

struct LinearSystem {
  RationalMatrix matrix;  // columns: x, y, z, p, q, r
  std::vector<Rational> rhs;
};

LinearSystem parametric_linear_system(const Rational& u, const Rational& v, const Rational& w);

// Independent route: exact Gaussian elimination on parametric_linear_system. Throws
// DegenerateParameters when the system is singular.
Solution6Rational parametric_linear_solve(const Rational& u, const Rational& v, const Rational& w);

// Evaluates the closed forms. Throws DegenerateParameters when D = 0 or any
// of u, v, w is zero.
Solution6Rational closed_form_eval(const Rational& u, const Rational& v, const Rational& w);

}  // namespace trisum

#endif  // TRISUM_PARAM3_HPP_
