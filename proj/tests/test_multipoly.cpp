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

#include <random>

#include "doctest.h"
#include "trisum/multipoly.hpp"

using namespace trisum;

namespace {

const Variables& uvw() {
  static const Variables vars{"u", "v", "w"};
  return vars;
}

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  Rational scalar() {
    std::uniform_int_distribution<long> num(-9, 9), den(1, 4);
    return make_rational(Integer(num(rng_)), Integer(den(rng_)));
  }

  Rational nonzero_scalar() {
    for (;;) {
      Rational q = scalar();
      if (q != 0) return q;
    }
  }

  MPoly poly(int terms = 4, std::uint32_t max_exp = 3) {
    std::uniform_int_distribution<std::uint32_t> e(0, max_exp);
    TermMap map;
    for (int i = 0; i < terms; ++i) map[Exponents{e(rng_), e(rng_), e(rng_)}] += scalar();
    return MPoly(uvw(), std::move(map));
  }

  MPoly nonzero_poly() {
    for (;;) {
      MPoly p = poly();
      if (!p.is_zero()) return p;
    }
  }

  Assignment point() { return {{"u", scalar()}, {"v", scalar()}, {"w", scalar()}}; }

 private:
  std::mt19937_64 rng_;
};

MPoly var(std::string_view name) { return MPoly::variable(uvw(), name); }

}  // namespace

TEST_CASE("rendering in graded-lex order") {
  const Variables uv{"u", "v"};
  const MPoly u = MPoly::variable(uv, "u"), v = MPoly::variable(uv, "v");
  const MPoly p = Rational(3) - 10 * pow(v, 2) + 4 * pow(u, 4) * pow(v, 2);
  CHECK(p.to_string() == "4*u^4*v^2 - 10*v^2 + 3");
  CHECK(MPoly(uv).to_string() == "0");
  CHECK((u - v).to_string() == "u - v");
  CHECK(p.total_degree() == 6);
  CHECK(p.degree("u") == 4);
}

TEST_CASE("ring axioms hold exactly") {
  Gen g(11);
  for (int i = 0; i < 60; ++i) {
    const MPoly a = g.poly(), b = g.poly(), c = g.poly();
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a - a).is_zero());
    CHECK(a * Rational(1) == a);
  }
}

TEST_CASE("evaluation is a ring homomorphism") {
  Gen g(12);
  for (int i = 0; i < 60; ++i) {
    const MPoly a = g.poly(), b = g.poly();
    const Assignment pt = g.point();
    CHECK((a * b).evaluate(pt) == a.evaluate(pt) * b.evaluate(pt));
    CHECK((a + b).evaluate(pt) == a.evaluate(pt) + b.evaluate(pt));
  }
  CHECK_THROWS_AS(var("u").evaluate({{"v", Rational(1)}}), DomainError);
}

TEST_CASE("pow and mixed rings") {
  const MPoly u = var("u");
  CHECK(pow(u + 1, 0) == MPoly(uvw(), Rational(1)));
  CHECK(pow(u + 1, 3) == (u + 1) * (u + 1) * (u + 1));
  CHECK_THROWS_AS(pow(u, -1), DomainError);
  const Variables other{"x"};
  CHECK_THROWS_AS(u + MPoly::variable(other, "x"), DomainError);
  CHECK_THROWS_AS(MPoly::variable(uvw(), "x"), DomainError);
}

TEST_CASE("substitution and embedding") {
  const MPoly u = var("u"), v = var("v"), w = var("w");
  const MPoly p = u * u * v + w;
  const MPoly q = substitute(p, Bindings{{"u", v + 1}, {"w", Rational(2)}});
  CHECK(q == (v + 1) * (v + 1) * v + 2);

  // Simultaneous, not sequential.
  CHECK(substitute(u - v, Bindings{{"u", v}, {"v", u}}) == v - u);

  const Variables uv{"u", "v"};
  const MPoly small = MPoly::variable(uv, "u") * MPoly::variable(uv, "v");
  CHECK(embed(small, uvw()) == u * v);
  CHECK_THROWS_AS(embed(w, uv), DomainError);
}

TEST_CASE("rational functions compare by cross-multiplication") {
  const MPoly u = var("u"), v = var("v");
  const RatFunc a(u * u - v * v, u + v);
  const RatFunc b(u - v);
  CHECK(a == b);
  CHECK(ratfunc_equal(a, b));
  CHECK_FALSE(a == RatFunc(u + v));
  CHECK_THROWS_AS(RatFunc(u, MPoly(uvw())), DomainError);
  CHECK_THROWS_AS(RatFunc(u, v).evaluate({{"u", Rational(1)}, {"v", Rational(0)}}),
                  DegenerateSpecialization);
  CHECK_THROWS_AS(substitute(RatFunc(u, v - 1), Bindings{{"v", Rational(1)}}),
                  DegenerateSpecialization);
  CHECK(RatFunc(u, v) / RatFunc(u, v) == RatFunc(MPoly(uvw(), Rational(1))));
}

TEST_CASE("ratfunc_equal is an equivalence and agrees with sampling") {
  Gen g(13);
  for (int i = 0; i < 40; ++i) {
    const MPoly n = g.poly(), d = g.nonzero_poly(), k = g.nonzero_poly();
    const RatFunc a(n, d);
    const RatFunc b(n * k, d * k);         // equal to a
    const RatFunc c(n * k * k, d * k * k);  // equal to both
    CHECK(ratfunc_equal(a, a));
    CHECK(ratfunc_equal(a, b) == ratfunc_equal(b, a));
    CHECK(ratfunc_equal(a, b));
    CHECK(ratfunc_equal(b, c));
    CHECK(ratfunc_equal(a, c));

    const RatFunc other(n + g.nonzero_poly(), d);
    const bool same = ratfunc_equal(a, other);
    int agree = 0, sampled = 0;
    while (sampled < 10) {
      const Assignment pt = g.point();
      if (d.evaluate(pt) == 0) continue;
      ++sampled;
      agree += a.evaluate(pt) == other.evaluate(pt);
    }
    if (same) {
      CHECK(agree == 10);
    } else {
      CHECK(agree < 10);
    }
  }
}
