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

#ifndef TRISUM_TRIANGULAR_HPP_
#define TRISUM_TRIANGULAR_HPP_

#include <optional>

#include "trisum/exact.hpp"

namespace trisum {

// n(n+1)/2, for any integer n.
Integer tri(const Integer& n);

// x(x+1)/2 over Q.
Rational tri_rational(const Rational& x);

inline Integer tri_of(const Integer& n) { return tri(n); }
inline Rational tri_of(const Rational& x) { return tri_rational(x); }

// The n >= 0 with tri(n) == t, if any.
std::optional<Integer> inv_tri(const Integer& t);

bool is_triangular(const Integer& t);

// Rational index s with tri_rational(s) == value, taken on the branch
// 2s+1 >= 0 (the two roots are s and -1-s). Exists iff 8*value+1 is the
// square of a rational.
std::optional<Rational> solve_index(const Rational& value);

// The other root of tri_rational(s) == value.
inline Rational conjugate_index(const Rational& s) { return Rational(-1 - s); }

}  // namespace trisum

#endif  // TRISUM_TRIANGULAR_HPP_
