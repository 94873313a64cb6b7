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

#include "trisum/exact.hpp"

#include <cctype>
#include <string>

namespace trisum {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Integer isqrt(const Integer& n) {
  if (n < 0) throw DomainError("isqrt of a negative integer");
  Integer r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

std::optional<Integer> perfect_square_root(const Integer& n) {
  if (n < 0) return std::nullopt;
  if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return std::nullopt;
  return isqrt(n);
}

std::optional<Rational> rational_sqrt(const Rational& q) {
  auto num = perfect_square_root(q.get_num());
  if (!num) return std::nullopt;
  auto den = perfect_square_root(q.get_den());
  if (!den) return std::nullopt;
  return make_rational(*num, *den);
}

bool is_integral(const Rational& q) { return q.get_den() == 1; }

namespace {

Integer parse_integer(std::string_view text, bool allow_sign) {
  std::size_t i = 0;
  if (allow_sign && !text.empty() && (text[0] == '-' || text[0] == '+')) i = 1;
  if (i == text.size()) throw DomainError("malformed rational literal");
  for (std::size_t j = i; j < text.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(text[j]))) {
      throw DomainError("malformed rational literal");
    }
  }
  std::string digits(text.substr(text[0] == '+' ? 1 : 0));
  return Integer(digits, 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(parse_integer(text, true));
  }
  const Integer num = parse_integer(text.substr(0, slash), true);
  const Integer den = parse_integer(text.substr(slash + 1), false);
  return make_rational(num, den);
}

std::string to_string(const Integer& n) { return n.get_str(); }

std::string to_string(const Rational& q) { return q.get_str(); }

std::string to_fraction_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace trisum
