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

#include "trisum/families.hpp"

#include <string>

namespace trisum {

const Variables& family_variables() {
  static const Variables vars{"u"};
  return vars;
}

namespace {

MPoly poly(std::initializer_list<long> low_to_high) {
  const Variables& vars = family_variables();
  TermMap terms;
  std::uint32_t k = 0;
  for (long c : low_to_high) terms.emplace(Exponents{k++}, Rational(c));
  return MPoly(vars, std::move(terms));
}

const Rational kHalf(1, 2);

PolyFamily first_family() {
  return PolyFamily{
      1,
      poly({1, 1}) * poly({5, 2}),
      poly({2, 1}) * poly({7, 8, 2}),
      kHalf * (poly({4, 7, 2}) * poly({7, 7, 2})),
      poly({15, 24, 12, 2}),
      kHalf * poly({40, 87, 73, 28, 4}),
      kHalf * poly({30, 77, 71, 28, 4}),
  };
}

PolyFamily second_family() {
  return PolyFamily{
      2,
      poly({3, 1}) * poly({3, 2}),
      poly({1, 1}) * poly({13, 10, 2}),
      kHalf * (poly({8, 9, 2}) * poly({11, 9, 2})),
      poly({16, 24, 12, 2}),
      kHalf * poly({92, 177, 121, 36, 4}),
      kHalf * (poly({2, 1}) * poly({3, 1}) * poly({3, 2}) * poly({5, 2})),
  };
}

Integer require_integral(const Rational& q) {
  if (!is_integral(q)) throw DomainError("family polynomial took a non-integral value");
  return q.get_num();
}

ScaledSolution scale_values(std::vector<Integer> values, const Integer& a, bool with_s) {
  if (a == 0) throw DomainError("scaling factor must be nonzero");
  for (auto& v : values) v *= a;
  auto f = [&](std::size_t i) { return scaled_quadratic(values[i], a); };
  bool ok = f(0) + f(1) == f(3) && f(1) + f(2) == f(4) && f(2) + f(0) == f(5);
  if (with_s) ok = ok && f(0) + f(1) + f(2) == f(6);
  if (!ok) throw DomainError("scaled tuple fails the quadratic system");
  return ScaledSolution{a, std::move(values)};
}

}  // namespace

PolyFamily family(int id) {
  switch (id) {
    case 1:
      return first_family();
    case 2:
      return second_family();
    default:
      throw DomainError("unknown family id " + std::to_string(id));
  }
}

Solution6 family_eval(int id, const Integer& u) {
  if (u < 0) throw DomainError("family parameter must be nonnegative");
  const PolyFamily fam = family(id);
  const Assignment at{{"u", Rational(u)}};
  auto value = [&](const MPoly& m) { return require_integral(m.evaluate(at)); };
  return Solution6(value(fam.x), value(fam.y), value(fam.z), value(fam.p), value(fam.q),
                   value(fam.r));
}

Integer scaled_quadratic(const Integer& x, const Integer& a) { return Integer(x * (x + a)); }

ScaledSolution scale_solution(const Solution6& sol, const Integer& a) {
  const auto& v = sol.values();
  return scale_values(std::vector<Integer>(v.begin(), v.end()), a, false);
}

ScaledSolution scale_solution(const Solution7& sol, const Integer& a) {
  const auto& v = sol.values();
  return scale_values(std::vector<Integer>(v.begin(), v.end()), a, true);
}

}  // namespace trisum
