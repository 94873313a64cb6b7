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

#include <algorithm>
#include <random>

#include "doctest.h"
#include "trisum/search.hpp"
#include "trisum/triangular.hpp"

using namespace trisum;

namespace {

std::optional<long> index_of_sum(long a, long b) {
  const auto p = inv_tri(tri(Integer(a)) + tri(Integer(b)));
  if (!p) return std::nullopt;
  return p->get_si();
}

// Direct triple loop over 0 < x < y < z < bound.
std::vector<Solution6> naive_system1(long bound) {
  std::vector<Solution6> out;
  for (long x = 1; x < bound; ++x) {
    for (long y = x + 1; y < bound; ++y) {
      const auto p = index_of_sum(x, y);
      if (!p) continue;
      for (long z = y + 1; z < bound; ++z) {
        const auto q = index_of_sum(y, z);
        const auto r = index_of_sum(z, x);
        if (q && r) {
          out.emplace_back(Integer(x), Integer(y), Integer(z), Integer(*p), Integer(*q),
                           Integer(*r));
        }
      }
    }
  }
  return out;
}

std::vector<Solution7> naive_system3(long bound, bool distinct) {
  std::vector<Solution7> out;
  for (long x = 1; x < bound; ++x) {
    for (long y = distinct ? x + 1 : x; y < bound; ++y) {
      for (long z = distinct ? y + 1 : y; z < bound; ++z) {
        const auto p = index_of_sum(x, y), q = index_of_sum(y, z), r = index_of_sum(z, x);
        const auto s = inv_tri(tri(Integer(x)) + tri(Integer(y)) + tri(Integer(z)));
        if (!(p && q && r && s)) continue;
        Solution7 sol(Integer(x), Integer(y), Integer(z), Integer(*p), Integer(*q), Integer(*r),
                      *s);
        if (distinct) {
          auto v = sol.values();
          std::sort(v.begin(), v.end());
          if (std::adjacent_find(v.begin(), v.end()) != v.end()) continue;
        }
        out.push_back(std::move(sol));
      }
    }
  }
  return out;
}

}  // namespace

TEST_CASE("u64 square root agrees with the big-integer one") {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 20000; ++i) {
    const std::uint64_t r = rng() >> (i % 33);
    const std::uint64_t n = i % 2 ? r : (r >> 32) * (r >> 32);
    const auto fast = perfect_square_root_u64(n);
    const auto slow = perfect_square_root(Integer(std::to_string(n)));
    REQUIRE(fast.has_value() == slow.has_value());
    if (fast) CHECK(Integer(std::to_string(*fast)) == *slow);
  }
  CHECK(*perfect_square_root_u64(0) == 0);
  CHECK(*perfect_square_root_u64(4294967295ULL * 4294967295ULL) == 4294967295ULL);
  CHECK_FALSE(perfect_square_root_u64(~std::uint64_t{0}).has_value());
}

TEST_CASE("pair graph edges are exactly the triangular pair sums") {
  const std::uint32_t bound = 200;
  const PairGraph g = build_pair_graph(bound);
  std::size_t edges = 0;
  for (long x = 1; x < bound; ++x) {
    for (long y = x + 1; y < bound; ++y) {
      const auto p = index_of_sum(x, y);
      const auto label = g.label(static_cast<std::uint32_t>(x), static_cast<std::uint32_t>(y));
      REQUIRE(p.has_value() == label.has_value());
      if (p) CHECK(*label == static_cast<std::uint32_t>(*p));
      edges += p.has_value();
    }
    const auto loop = index_of_sum(x, x);
    const auto loop_label = g.loop_label(static_cast<std::uint32_t>(x));
    REQUIRE(loop.has_value() == loop_label.has_value());
  }
  CHECK(g.edge_count() == edges);
  CHECK_THROWS_AS(build_pair_graph(1), DomainError);
}

TEST_CASE("three-sum search matches the triple loop for every bound up to 120") {
  const auto all = naive_system1(120);
  for (long bound = 3; bound <= 120; ++bound) {
    std::vector<Solution6> expected;
    for (const auto& s : all) {
      if (s.z() < bound) expected.push_back(s);
    }
    CAPTURE(bound);
    CHECK(solve_system1(static_cast<std::uint64_t>(bound)) == expected);
  }
  CHECK_THROWS_AS(solve_system1(2), DomainError);
}

TEST_CASE("four-sum search matches the triple loop") {
  CHECK(solve_system3(60, false) == naive_system3(60, false));
  CHECK(solve_system3(60, true) == naive_system3(60, true));
  const auto small = solve_system3(20, false);
  CHECK(std::find(small.begin(), small.end(),
                  Solution7(Integer(11), Integer(14), Integer(14), Integer(18), Integer(20),
                            Integer(18), Integer(23))) != small.end());
}

TEST_CASE("worker count does not change the output") {
  const auto one = solve_system1(2500, {1});
  CHECK(solve_system1(2500, {3}) == one);
  CHECK(solve_system1(2500, {0}) == one);
  CHECK(solve_system3(1500, true, {1}) == solve_system3(1500, true, {4}));
  CHECK(solve_system3(400, false, {1}) == solve_system3(400, false, {4}));
}

TEST_CASE("larger bounds only add solutions") {
  const auto smaller = solve_system1(400);
  const auto larger = solve_system1(900);
  CHECK(std::includes(larger.begin(), larger.end(), smaller.begin(), smaller.end()));
  CHECK(std::is_sorted(larger.begin(), larger.end()));
}

TEST_CASE("known distinct four-sum solutions") {
  const auto& known = known_distinct_solutions();
  REQUIRE(known.size() == 4);
  for (const auto& s : known) CHECK(is_known_distinct_solution(s));
  CHECK_FALSE(is_known_distinct_solution(Solution7(Integer(11), Integer(14), Integer(14),
                                                   Integer(18), Integer(20), Integer(18),
                                                   Integer(23))));
}
