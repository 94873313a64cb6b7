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

#ifndef TRISUM_MULTIPOLY_HPP_
#define TRISUM_MULTIPOLY_HPP_

// Sparse multivariate polynomials over Q and unreduced rational functions.
//
// Every polynomial carries an ordered variable list; operands of a binary
// operation must share it. Exponent vectors are dense over that list and
// terms are stored in graded-lex order (highest first), with no zero
// coefficients, so two polynomials are equal iff their term maps are.

#include <cstdint>
#include <initializer_list>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "trisum/exact.hpp"

namespace trisum {

class Variables {
 public:
  Variables(std::initializer_list<std::string> names);
  explicit Variables(std::vector<std::string> names);

  std::size_t size() const { return names_->size(); }
  const std::string& name(std::size_t i) const { return (*names_)[i]; }
  const std::vector<std::string>& names() const { return *names_; }
  std::optional<std::size_t> index_of(std::string_view name) const;
  // Throws DomainError for an unknown name.
  std::size_t require(std::string_view name) const;

  friend bool operator==(const Variables& a, const Variables& b) {
    return a.names_ == b.names_ || *a.names_ == *b.names_;
  }

 private:
  std::shared_ptr<const std::vector<std::string>> names_;
};

using Exponents = std::vector<std::uint32_t>;

// Total degree descending, ties broken lexicographically (first variable
// most significant), larger first.
struct GradedLexGreater {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

using TermMap = std::map<Exponents, Rational, GradedLexGreater>;
using Assignment = std::map<std::string, Rational, std::less<>>;

class MPoly {
 public:
  explicit MPoly(Variables vars);
  MPoly(Variables vars, const Rational& constant);
  // Zero coefficients in `terms` are dropped.
  MPoly(Variables vars, TermMap terms);

  static MPoly variable(const Variables& vars, std::string_view name);

  const Variables& variables() const { return vars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;

  Rational coefficient(const Exponents& e) const;
  Rational constant_term() const;
  std::uint32_t degree(std::string_view var) const;
  std::uint32_t total_degree() const;

  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  MPoly& operator*=(const MPoly& o);
  MPoly& operator*=(const Rational& c);

  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend MPoly operator*(MPoly a, const Rational& c) { return a *= c; }
  friend MPoly operator*(const Rational& c, MPoly a) { return a *= c; }
  friend MPoly operator+(MPoly a, const Rational& c);
  friend MPoly operator+(const Rational& c, MPoly a) { return std::move(a) + c; }
  friend MPoly operator-(MPoly a, const Rational& c) { return std::move(a) + Rational(-c); }
  friend MPoly operator-(const Rational& c, const MPoly& a) { return -a + c; }
  MPoly operator-() const;

  friend bool operator==(const MPoly& a, const MPoly& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }

  // Exact value; every variable with a nonzero exponent must be assigned,
  // otherwise DomainError.
  Rational evaluate(const Assignment& point) const;

  // Graded-lex rendering, e.g. "4*u^4*v^2 - 10*v^2 + 3".
  std::string to_string() const;

 private:
  void require_same_ring(const MPoly& o) const;

  Variables vars_;
  TermMap terms_;
};

// Throws DomainError for a negative exponent.
MPoly pow(const MPoly& base, int exponent);

using Binding = std::variant<Rational, MPoly>;
using Bindings = std::map<std::string, Binding, std::less<>>;

// Simultaneous substitution. Unbound variables survive; the variable list is
// unchanged (bound variables simply no longer occur). MPoly bindings must
// live over the same variable list.
MPoly substitute(const MPoly& p, const Bindings& bindings);

// The same polynomial over `target`, matching variables by name. Throws
// DomainError if a variable of p that actually occurs is missing there.
MPoly embed(const MPoly& p, const Variables& target);

// Numerator/denominator pair, never reduced. Equality is the polynomial
// identity a.num * b.den == b.num * a.den.
class RatFunc {
 public:
  explicit RatFunc(MPoly num);
  // Throws DomainError when den is the zero polynomial.
  RatFunc(MPoly num, MPoly den);

  const MPoly& numerator() const { return num_; }
  const MPoly& denominator() const { return den_; }
  const Variables& variables() const { return num_.variables(); }
  bool is_zero() const { return num_.is_zero(); }

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  // Throws DomainError when b is zero.
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const Rational& c, const RatFunc& a);
  friend RatFunc operator+(const RatFunc& a, const Rational& c);
  RatFunc operator-() const;

  friend bool operator==(const RatFunc& a, const RatFunc& b);

  // Throws DegenerateSpecialization when the denominator vanishes.
  Rational evaluate(const Assignment& point) const;

 private:
  MPoly num_;
  MPoly den_;
};

bool ratfunc_equal(const RatFunc& a, const RatFunc& b);

// Throws DegenerateSpecialization when the denominator becomes the zero
// polynomial.
RatFunc substitute(const RatFunc& f, const Bindings& bindings);

}  // namespace trisum

#endif  // TRISUM_MULTIPOLY_HPP_
