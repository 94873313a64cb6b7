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

#include "trisum/search.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <functional>
#include <thread>

namespace trisum {

namespace {

template <std::size_t M>
constexpr std::array<bool, M> square_residues() {
  std::array<bool, M> table{};
  for (std::size_t i = 0; i < M; ++i) table[(i * i) % M] = true;
  return table;
}

constexpr auto kSquaresMod64 = square_residues<64>();
constexpr auto kSquaresMod63 = square_residues<63>();
constexpr auto kSquaresMod65 = square_residues<65>();
constexpr auto kSquaresMod11 = square_residues<11>();

std::uint64_t isqrt_u64(std::uint64_t n) {
  if (n < 2) return n;
  // Start above the root and run Newton downward; integer-only.
  std::uint64_t x = std::uint64_t{1} << ((std::bit_width(n) + 1) / 2);
  for (;;) {
    const std::uint64_t y = (x + n / x) / 2;
    if (y >= x) return x;
    x = y;
  }
}

unsigned resolve_workers(unsigned requested) {
  if (requested != 0) return requested;
  return std::max(1U, std::thread::hardware_concurrency());
}

// Runs body(x, worker_index) for x in [first, last) on `workers` threads,
// handing out x values from a shared counter.
void for_each_index(std::uint32_t first, std::uint32_t last, unsigned workers,
                    const std::function<void(std::uint32_t, unsigned)>& body) {
  if (workers <= 1 || last - first < 2) {
    for (std::uint32_t x = first; x < last; ++x) body(x, 0);
    return;
  }
  std::atomic<std::uint32_t> next{first};
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::uint32_t x = next.fetch_add(1); x < last; x = next.fetch_add(1)) body(x, w);
    });
  }
}

std::uint64_t tri_u64(std::uint64_t n) { return n * (n + 1) / 2; }

std::uint32_t checked_bound(std::uint64_t bound, std::uint64_t minimum) {
  if (bound < minimum) {
    throw DomainError("search bound must be at least " + std::to_string(minimum));
  }
  if (bound > kMaxSearchBound) throw DomainError("search bound too large");
  return static_cast<std::uint32_t>(bound);
}

using RawTuple = std::array<std::uint32_t, 6>;

// Lists triangles {x, y, z}. In strict mode x < y < z using only proper
// edges; in relaxed mode x <= y <= z with loops standing in for x == y etc.
std::vector<RawTuple> enumerate_triangles(const PairGraph& g, bool relaxed, unsigned workers) {
  auto closed = [&](std::uint32_t a, std::vector<PairEdge>& out) {
    out.clear();
    if (relaxed) {
      if (auto loop = g.loop_label(a)) out.push_back({a, *loop});
    }
    auto nb = g.neighbors(a);
    out.insert(out.end(), nb.begin(), nb.end());
  };

  std::vector<std::vector<RawTuple>> found(workers);
  std::vector<std::vector<PairEdge>> scratch_x(workers), scratch_y(workers);
  for_each_index(1, g.bound(), workers, [&](std::uint32_t x, unsigned w) {
    auto& cx = scratch_x[w];
    auto& cy = scratch_y[w];
    closed(x, cx);
    for (std::size_t i = 0; i < cx.size(); ++i) {
      const auto [y, p] = cx[i];
      closed(y, cy);
      // Candidates z: in N(x) after y (or from y itself when relaxed) and in N(y).
      std::size_t a = relaxed ? i : i + 1;
      std::size_t b = 0;
      while (a < cx.size() && b < cy.size()) {
        if (cx[a].y < cy[b].y) {
          ++a;
        } else if (cy[b].y < cx[a].y) {
          ++b;
        } else {
          found[w].push_back({x, y, cx[a].y, p, cy[b].label, cx[a].label});
          ++a;
          ++b;
        }
      }
    }
  });

  std::vector<RawTuple> all;
  for (auto& part : found) all.insert(all.end(), part.begin(), part.end());
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  return all;
}

}  // namespace

std::optional<std::uint64_t> perfect_square_root_u64(std::uint64_t n) {
  if (!kSquaresMod64[n & 63U]) return std::nullopt;
  if (!kSquaresMod63[n % 63] || !kSquaresMod65[n % 65] || !kSquaresMod11[n % 11]) {
    return std::nullopt;
  }
  const std::uint64_t r = isqrt_u64(n);
  if (r * r != n) return std::nullopt;
  return r;
}

PairGraph::PairGraph(std::uint32_t bound, std::vector<std::uint64_t> offsets,
                     std::vector<PairEdge> edges, std::vector<std::uint32_t> diagonal)
    : bound_(bound),
      offsets_(std::move(offsets)),
      edges_(std::move(edges)),
      diagonal_(std::move(diagonal)) {}

std::span<const PairEdge> PairGraph::neighbors(std::uint32_t x) const {
  if (x == 0 || x >= bound_) return {};
  return std::span<const PairEdge>(edges_).subspan(offsets_[x], offsets_[x + 1] - offsets_[x]);
}

std::optional<std::uint32_t> PairGraph::label(std::uint32_t x, std::uint32_t y) const {
  auto nb = neighbors(x);
  auto it = std::lower_bound(nb.begin(), nb.end(), y,
                             [](const PairEdge& e, std::uint32_t v) { return e.y < v; });
  if (it == nb.end() || it->y != y) return std::nullopt;
  return it->label;
}

std::optional<std::uint32_t> PairGraph::loop_label(std::uint32_t x) const {
  if (x == 0 || x >= bound_ || diagonal_[x] == 0) return std::nullopt;
  return diagonal_[x];
}

PairGraph build_pair_graph(std::uint64_t bound_in, const SearchOptions& options) {
  const std::uint32_t bound = checked_bound(bound_in, 2);
  const unsigned workers = resolve_workers(options.workers);

  std::vector<std::vector<PairEdge>> rows(bound);
  std::vector<std::uint32_t> diagonal(bound, 0);
  for_each_index(1, bound, workers, [&](std::uint32_t x, unsigned) {
    const std::uint64_t tx = tri_u64(x);
    // 8(t_x + t_y) + 1 must be an odd square (2p+1)^2.
    if (auto root = perfect_square_root_u64(16 * tx + 1)) {
      diagonal[x] = static_cast<std::uint32_t>((*root - 1) / 2);
    }
    auto& row = rows[x];
    for (std::uint64_t y = x + 1; y < bound; ++y) {
      if (auto root = perfect_square_root_u64(8 * (tx + tri_u64(y)) + 1)) {
        row.push_back({static_cast<std::uint32_t>(y), static_cast<std::uint32_t>((*root - 1) / 2)});
      }
    }
  });

  std::vector<std::uint64_t> offsets(static_cast<std::size_t>(bound) + 1, 0);
  for (std::uint32_t x = 1; x < bound; ++x) offsets[x + 1] = offsets[x] + rows[x].size();
  std::vector<PairEdge> edges;
  edges.reserve(offsets[bound]);
  for (auto& row : rows) edges.insert(edges.end(), row.begin(), row.end());
  return PairGraph(bound, std::move(offsets), std::move(edges), std::move(diagonal));
}

std::vector<Solution6> solve_system1(std::uint64_t bound, const SearchOptions& options) {
  checked_bound(bound, 3);
  const unsigned workers = resolve_workers(options.workers);
  const PairGraph graph = build_pair_graph(bound, options);
  std::vector<Solution6> out;
  for (const auto& t : enumerate_triangles(graph, false, workers)) {
    out.emplace_back(Integer(t[0]), Integer(t[1]), Integer(t[2]), Integer(t[3]), Integer(t[4]),
                     Integer(t[5]));
  }
  return out;
}

std::vector<Solution7> solve_system3(std::uint64_t bound, bool distinct_only,
                                     const SearchOptions& options) {
  checked_bound(bound, 3);
  const unsigned workers = resolve_workers(options.workers);
  const PairGraph graph = build_pair_graph(bound, options);
  std::vector<Solution7> out;
  for (const auto& t : enumerate_triangles(graph, !distinct_only, workers)) {
    const std::uint64_t sum = tri_u64(t[0]) + tri_u64(t[1]) + tri_u64(t[2]);
    const auto root = perfect_square_root_u64(8 * sum + 1);
    if (!root) continue;
    const auto s = static_cast<std::uint32_t>((*root - 1) / 2);
    if (distinct_only) {
      std::array<std::uint32_t, 7> all{t[0], t[1], t[2], t[3], t[4], t[5], s};
      std::sort(all.begin(), all.end());
      if (std::adjacent_find(all.begin(), all.end()) != all.end()) continue;
    }
    out.emplace_back(Integer(t[0]), Integer(t[1]), Integer(t[2]), Integer(t[3]), Integer(t[4]),
                     Integer(t[5]), Integer(s));
  }
  return out;
}

const std::vector<Solution7>& known_distinct_solutions() {
  static const std::vector<Solution7> rows = [] {
    const std::array<std::array<long, 7>, 4> raw{{
        {230, 741, 870, 776, 1143, 900, 1166},
        {609, 779, 923, 989, 1208, 1106, 1353},
        {714, 798, 989, 1071, 1271, 1220, 1458},
        {1224, 1716, 3219, 2108, 3648, 3444, 3848},
    }};
    std::vector<Solution7> v;
    for (const auto& r : raw) {
      v.emplace_back(Integer(r[0]), Integer(r[1]), Integer(r[2]), Integer(r[3]), Integer(r[4]),
                     Integer(r[5]), Integer(r[6]));
    }
    return v;
  }();
  return rows;
}

bool is_known_distinct_solution(const Solution7& s) {
  const auto& known = known_distinct_solutions();
  return std::find(known.begin(), known.end(), s) != known.end();
}

}  // namespace trisum
