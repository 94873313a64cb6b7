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

#ifndef TRISUM_SEARCH_HPP_
#define TRISUM_SEARCH_HPP_

// Exhaustive integer search for the three-sum and four-sum systems.
//
// Solutions with x < y < z < N are exactly the triangles of the pair graph
// on 1..N-1, where x -- y is an edge when t_x + t_y is triangular (edge label
// p with t_p = t_x + t_y). Triangles are listed by merging sorted neighbor
// lists. All arithmetic on the hot path is 64-bit; results are promoted to
// exact Integer tuples, which re-verify themselves on construction.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "trisum/solution.hpp"

namespace trisum {

// Largest accepted search bound. Pair sums stay far below 2^63 and labels
// fit in 32 bits.
inline constexpr std::uint64_t kMaxSearchBound = std::uint64_t{1} << 24;

struct PairEdge {
  std::uint32_t y;
  std::uint32_t label;  // p with t_p = t_x + t_y
  friend bool operator==(const PairEdge&, const PairEdge&) = default;
};

class PairGraph {
 public:
  PairGraph(std::uint32_t bound, std::vector<std::uint64_t> offsets, std::vector<PairEdge> edges,
            std::vector<std::uint32_t> diagonal);

  std::uint32_t bound() const { return bound_; }
  // Neighbors y > x of vertex x (1 <= x < bound), sorted by y.
  std::span<const PairEdge> neighbors(std::uint32_t x) const;
  // Label of edge (x, y) for x < y, if present.
  std::optional<std::uint32_t> label(std::uint32_t x, std::uint32_t y) const;
  // p with t_p = 2 t_x, if any (the x == y "loop" used by relaxed searches).
  std::optional<std::uint32_t> loop_label(std::uint32_t x) const;
  std::size_t edge_count() const { return edges_.size(); }

 private:
  std::uint32_t bound_;
  std::vector<std::uint64_t> offsets_;  // CSR row starts, indexed by x
  std::vector<PairEdge> edges_;
  std::vector<std::uint32_t> diagonal_;  // 0 = no loop
};

struct SearchOptions {
  // Worker threads; 0 means std::thread::hardware_concurrency(). Output is
  // identical for every worker count.
  unsigned workers = 1;
};

// Fast exact test used by the search: r with r*r == n, if n is a square.
std::optional<std::uint64_t> perfect_square_root_u64(std::uint64_t n);

// Throws DomainError when bound < 2 or bound > kMaxSearchBound.
PairGraph build_pair_graph(std::uint64_t bound, const SearchOptions& options = {});

// All solutions of the three-sum system with 0 < x < y < z < bound, sorted by
// (x, y, z). Throws DomainError when bound < 3.
std::vector<Solution6> solve_system1(std::uint64_t bound, const SearchOptions& options = {});

// Four-sum solutions below `bound`. With distinct_only, x < y < z and all
// seven entries pairwise different; otherwise 0 < x <= y <= z. Sorted.
std::vector<Solution7> solve_system3(std::uint64_t bound, bool distinct_only,
                                     const SearchOptions& options = {});

// The known distinct four-sum solutions (all below 3300).
const std::vector<Solution7>& known_distinct_solutions();
bool is_known_distinct_solution(const Solution7& s);

}  // namespace trisum

#endif  // TRISUM_SEARCH_HPP_
