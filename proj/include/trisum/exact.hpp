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

#ifndef TRISUM_EXACT_HPP_
#define TRISUM_EXACT_HPP_

// Exact integer and rational scalars. Both are GMP values: Rational is kept
// in canonical form (positive denominator, coprime parts) by every GMP
// operation, so equality is structural. The two-argument mpq_class
// constructor does not canonicalize; build fractions with make_rational.

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

#include "trisum/errors.hpp"

namespace trisum {

using Integer = mpz_class;
using Rational = mpq_class;

// Builds num/den in canonical form. Throws DomainError when den == 0.
Rational make_rational(const Integer& num, const Integer& den);

// floor(sqrt(n)). Throws DomainError for n < 0.
Integer isqrt(const Integer& n);

// r >= 0 with r*r == n, if n is a perfect square.
std::optional<Integer> perfect_square_root(const Integer& n);

// Nonnegative rational square root when numerator and denominator are both
// perfect squares.
std::optional<Rational> rational_sqrt(const Rational& q);

bool is_integral(const Rational& q);

// Accepts "a/b" or "a" with an optional sign on the numerator only.
// Throws DomainError on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

std::string to_string(const Integer& n);
// "a/b", or "a" when the denominator is 1.
std::string to_string(const Rational& q);
// Always "a/b", including "a/1"; used for machine-readable output.
std::string to_fraction_string(const Rational& q);

}  // namespace trisum

#endif  // TRISUM_EXACT_HPP_
