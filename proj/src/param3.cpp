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

#include "trisum/param3.hpp"

namespace trisum {

const Variables& param_variables() {
  static const Variables vars{"u", "v", "w"};
  return vars;
}

namespace {

ParamSolution build_closed_form() {
  const Variables& vars = param_variables();
  const MPoly u = MPoly::variable(vars, "u");
  const MPoly v = MPoly::variable(vars, "v");
  const MPoly w = MPoly::variable(vars, "w");
  const Rational one(1);
  const MPoly u2 = u * u;
  const MPoly v2 = v * v;

  const MPoly den = (one - u2) * (v2 - one) * (w * w - one) + Rational(8) * u * v * w;

  const MPoly nx = (u - one) * w *
                   (one + u - Rational(2) * v + Rational(2) * u * v + v2 + u * v2 +
                    (Rational(-1) - u + v2 + u * v2) * w);
  const MPoly ny = u * (v - one) *
                   (one - u + v - u * v + (Rational(2) * v - Rational(2)) * w +
                    (one + u + v + u * v) * w * w);
  const MPoly nz = v * (w - one) *
                   (one - Rational(2) * u + u2 - v + u2 * v +
                    (one + Rational(2) * u + u2 - v + u2 * v) * w);

  return ParamSolution{
      RatFunc(nx, den),
      RatFunc(ny, den),
      RatFunc(nz, den),
      RatFunc(u * nx + ny, u * den),
      RatFunc(v * ny + nz, v * den),
      RatFunc(w * nz + nx, w * den),
      den,
  };
}

}  // namespace

const ParamSolution& closed_form_symbolic() {
  static const ParamSolution sol = build_closed_form();
  return sol;
}

Rational param_denominator(const Rational& u, const Rational& v, const Rational& w) {
  return Rational((1 - u * u) * (v * v - 1) * (w * w - 1) + 8 * u * v * w);
}

LinearSystem parametric_linear_system(const Rational& u, const Rational& v, const Rational& w) {
  const Rational zero(0), one(1), minus(-1);
  // Unknown order: x, y, z, p, q, r.
  //   u x + y - u p = 0          -x + u y - p = 1 - u
  //   v y + z - v q = 0          -y + v z - q = 1 - v
  //   x + w z - w r = 0          w x - z - r = 1 - w
  LinearSystem sys;
  sys.matrix = {
      {u, one, zero, Rational(-u), zero, zero},
      {minus, u, zero, minus, zero, zero},
      {zero, v, one, zero, Rational(-v), zero},
      {zero, minus, v, zero, minus, zero},
      {one, zero, w, zero, zero, Rational(-w)},
      {w, zero, minus, zero, zero, minus},
  };
  sys.rhs = {zero, Rational(1 - u), zero, Rational(1 - v), zero, Rational(1 - w)};
  return sys;
}

Solution6Rational parametric_linear_solve(const Rational& u, const Rational& v, const Rational& w) {
  LinearSystem sys = parametric_linear_system(u, v, w);
  auto sol = solve_linear(std::move(sys.matrix), std::move(sys.rhs));
  if (!sol) throw DegenerateParameters("linear system is singular at these parameters");
  auto& s = *sol;
  return Solution6Rational(s[0], s[1], s[2], s[3], s[4], s[5]);
}

Solution6Rational closed_form_eval(const Rational& u, const Rational& v, const Rational& w) {
  if (u == 0 || v == 0 || w == 0) {
    throw DegenerateParameters("parameters u, v, w must be nonzero");
  }
  if (param_denominator(u, v, w) == 0) {
    throw DegenerateParameters("denominator (1-u^2)(v^2-1)(w^2-1)+8uvw vanishes");
  }
  const ParamSolution& f = closed_form_symbolic();
  const Assignment at{{"u", u}, {"v", v}, {"w", w}};
  return Solution6Rational(f.x.evaluate(at), f.y.evaluate(at), f.z.evaluate(at),
                           f.p.evaluate(at), f.q.evaluate(at), f.r.evaluate(at));
}

}  // namespace trisum
