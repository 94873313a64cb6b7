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

#include "trisum/linear.hpp"

#include <utility>

namespace trisum {

namespace {

void check_square(const RationalMatrix& a) {
  for (const auto& row : a) {
    if (row.size() != a.size()) throw DomainError("matrix is not square");
  }
}

// Index of the first row at or below `col` with a nonzero entry in `col`.
std::optional<std::size_t> find_pivot(const RationalMatrix& a, std::size_t col) {
  for (std::size_t r = col; r < a.size(); ++r) {
    if (a[r][col] != 0) return r;
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::vector<Rational>> solve_linear(RationalMatrix a, std::vector<Rational> b) {
  check_square(a);
  const std::size_t n = a.size();
  if (b.size() != n) throw DomainError("right-hand side length mismatch");

  for (std::size_t col = 0; col < n; ++col) {
    auto pivot = find_pivot(a, col);
    if (!pivot) return std::nullopt;
    std::swap(a[col], a[*pivot]);
    std::swap(b[col], b[*pivot]);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a[r][col] == 0) continue;
      const Rational factor = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= factor * a[col][c];
      b[r] -= factor * b[col];
    }
  }

  std::vector<Rational> x(n);
  for (std::size_t i = n; i-- > 0;) {
    Rational acc = b[i];
    for (std::size_t c = i + 1; c < n; ++c) acc -= a[i][c] * x[c];
    x[i] = acc / a[i][i];
  }
  return x;
}

Rational determinant(RationalMatrix a) {
  check_square(a);
  const std::size_t n = a.size();
  Rational det(1);
  for (std::size_t col = 0; col < n; ++col) {
    auto pivot = find_pivot(a, col);
    if (!pivot) return Rational(0);
    if (*pivot != col) {
      std::swap(a[col], a[*pivot]);
      det = -det;
    }
    det *= a[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a[r][col] == 0) continue;
      const Rational factor = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= factor * a[col][c];
    }
  }
  return det;
}

}  // namespace trisum
