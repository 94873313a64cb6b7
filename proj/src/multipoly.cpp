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

#include "trisum/multipoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <utility>

namespace trisum {

// ---------------------------------------------------------------------------
// Variables

Variables::Variables(std::initializer_list<std::string> names)
    : Variables(std::vector<std::string>(names)) {}

Variables::Variables(std::vector<std::string> names)
    : names_(std::make_shared<const std::vector<std::string>>(std::move(names))) {}

std::optional<std::size_t> Variables::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_->size(); ++i) {
    if ((*names_)[i] == name) return i;
  }
  return std::nullopt;
}

std::size_t Variables::require(std::string_view name) const {
  auto idx = index_of(name);
  if (!idx) throw DomainError("unknown variable '" + std::string(name) + "'");
  return *idx;
}

bool GradedLexGreater::operator()(const Exponents& a, const Exponents& b) const {
  const auto da = std::accumulate(a.begin(), a.end(), std::uint64_t{0});
  const auto db = std::accumulate(b.begin(), b.end(), std::uint64_t{0});
  if (da != db) return da > db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

// ---------------------------------------------------------------------------
// MPoly

MPoly::MPoly(Variables vars) : vars_(std::move(vars)) {}

MPoly::MPoly(Variables vars, const Rational& constant) : vars_(std::move(vars)) {
  if (constant != 0) terms_.emplace(Exponents(vars_.size(), 0), constant);
}

MPoly::MPoly(Variables vars, TermMap terms) : vars_(std::move(vars)), terms_(std::move(terms)) {
  std::erase_if(terms_, [](const auto& kv) { return kv.second == 0; });
  for (const auto& [e, c] : terms_) {
    if (e.size() != vars_.size()) throw DomainError("exponent vector length mismatch");
  }
}

MPoly MPoly::variable(const Variables& vars, std::string_view name) {
  Exponents e(vars.size(), 0);
  e[vars.require(name)] = 1;
  TermMap t;
  t.emplace(std::move(e), Rational(1));
  return MPoly(vars, std::move(t));
}

bool MPoly::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 &&
          std::all_of(terms_.begin()->first.begin(), terms_.begin()->first.end(),
                      [](std::uint32_t x) { return x == 0; }));
}

Rational MPoly::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational MPoly::constant_term() const { return coefficient(Exponents(vars_.size(), 0)); }

std::uint32_t MPoly::degree(std::string_view var) const {
  const auto i = vars_.require(var);
  std::uint32_t d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[i]);
  return d;
}

std::uint32_t MPoly::total_degree() const {
  // Graded order: the first term has the largest total degree.
  if (terms_.empty()) return 0;
  const auto& e = terms_.begin()->first;
  return std::accumulate(e.begin(), e.end(), std::uint32_t{0});
}

void MPoly::require_same_ring(const MPoly& o) const {
  if (!(vars_ == o.vars_)) throw DomainError("polynomials over different variable lists");
}

MPoly& MPoly::operator+=(const MPoly& o) {
  require_same_ring(o);
  for (const auto& [e, c] : o.terms_) {
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  require_same_ring(o);
  for (const auto& [e, c] : o.terms_) {
    auto [it, inserted] = terms_.try_emplace(e, -c);
    if (!inserted) {
      it->second -= c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  a.require_same_ring(b);
  MPoly out(a.vars_);
  const std::size_t n = a.vars_.size();
  Exponents e(n);
  Rational prod;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < n; ++i) e[i] = ea[i] + eb[i];
      prod = ca * cb;
      auto [it, inserted] = out.terms_.try_emplace(e, prod);
      if (!inserted) it->second += prod;
    }
  }
  std::erase_if(out.terms_, [](const auto& kv) { return kv.second == 0; });
  return out;
}

MPoly& MPoly::operator*=(const MPoly& o) { return *this = *this * o; }

MPoly& MPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& [e, coeff] : terms_) coeff *= c;
  }
  return *this;
}

MPoly operator+(MPoly a, const Rational& c) {
  a += MPoly(a.vars_, c);
  return a;
}

MPoly MPoly::operator-() const {
  MPoly out(*this);
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

Rational MPoly::evaluate(const Assignment& point) const {
  const std::size_t n = vars_.size();
  // powers[i][k] = value_i^k, built up to the degree each variable needs.
  std::vector<std::vector<Rational>> powers(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::uint32_t deg = 0;
    for (const auto& [e, c] : terms_) deg = std::max(deg, e[i]);
    if (deg == 0) continue;
    auto it = point.find(vars_.name(i));
    if (it == point.end()) {
      throw DomainError("no value assigned to variable '" + vars_.name(i) + "'");
    }
    powers[i].reserve(deg + 1);
    powers[i].emplace_back(1);
    for (std::uint32_t k = 1; k <= deg; ++k) powers[i].push_back(powers[i].back() * it->second);
  }
  Rational sum(0);
  Rational term;
  for (const auto& [e, c] : terms_) {
    term = c;
    for (std::size_t i = 0; i < n; ++i) {
      if (e[i] != 0) term *= powers[i][e[i]];
    }
    sum += term;
  }
  return sum;
}

std::string MPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const bool negative = c < 0;
    const Rational mag = abs(c);
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;

    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += vars_.name(i);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) {
      os << trisum::to_string(mag);
    } else if (mag == 1) {
      os << mono;
    } else {
      os << trisum::to_string(mag) << "*" << mono;
    }
  }
  return os.str();
}

MPoly pow(const MPoly& base, int exponent) {
  if (exponent < 0) throw DomainError("negative polynomial exponent");
  MPoly result(base.variables(), Rational(1));
  MPoly sq = base;
  for (unsigned e = static_cast<unsigned>(exponent); e != 0; e >>= 1) {
    if (e & 1U) result *= sq;
    if (e > 1) sq *= sq;
  }
  return result;
}

MPoly embed(const MPoly& p, const Variables& target) {
  const Variables& vars = p.variables();
  std::vector<std::optional<std::size_t>> slot(vars.size());
  for (std::size_t i = 0; i < vars.size(); ++i) slot[i] = target.index_of(vars.name(i));
  TermMap terms;
  for (const auto& [e, c] : p.terms()) {
    Exponents moved(target.size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!slot[i]) throw DomainError("variable " + vars.name(i) + " is missing from the target");
      moved[*slot[i]] = e[i];
    }
    terms.emplace(std::move(moved), c);
  }
  return MPoly(target, std::move(terms));
}

MPoly substitute(const MPoly& p, const Bindings& bindings) {
  const Variables& vars = p.variables();
  const std::size_t n = vars.size();

  std::vector<std::optional<MPoly>> bound(n);
  for (const auto& [name, value] : bindings) {
    const std::size_t i = vars.require(name);
    if (const auto* q = std::get_if<Rational>(&value)) {
      bound[i].emplace(vars, *q);
    } else {
      const auto& poly = std::get<MPoly>(value);
      if (!(poly.variables() == vars)) {
        throw DomainError("substituted polynomial lives over a different variable list");
      }
      bound[i].emplace(poly);
    }
  }

  // Lazily grown power tables for bound variables.
  std::vector<std::vector<MPoly>> powers(n);
  auto power = [&](std::size_t i, std::uint32_t k) -> const MPoly& {
    auto& table = powers[i];
    if (table.empty()) table.emplace_back(vars, Rational(1));
    while (table.size() <= k) table.push_back(table.back() * *bound[i]);
    return table[k];
  };

  MPoly out(vars);
  for (const auto& [e, c] : p.terms()) {
    Exponents kept(n, 0);
    bool any_bound = false;
    for (std::size_t i = 0; i < n; ++i) {
      if (bound[i]) {
        any_bound = any_bound || e[i] != 0;
      } else {
        kept[i] = e[i];
      }
    }
    TermMap single;
    single.emplace(std::move(kept), c);
    MPoly term(vars, std::move(single));
    if (any_bound) {
      for (std::size_t i = 0; i < n; ++i) {
        if (bound[i] && e[i] != 0) term *= power(i, e[i]);
      }
    }
    out += term;
  }
  return out;
}

// ---------------------------------------------------------------------------
// RatFunc

RatFunc::RatFunc(MPoly num) : num_(std::move(num)), den_(num_.variables(), Rational(1)) {}

RatFunc::RatFunc(MPoly num, MPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DomainError("rational function with zero denominator");
  if (!(num_.variables() == den_.variables())) {
    throw DomainError("numerator and denominator over different variable lists");
  }
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
  return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) {
  if (a.den_ == b.den_) return RatFunc(a.num_ - b.num_, a.den_);
  return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  if (b.num_.is_zero()) throw DomainError("division by the zero rational function");
  return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

RatFunc operator*(const Rational& c, const RatFunc& a) { return RatFunc(c * a.num_, a.den_); }

RatFunc operator+(const RatFunc& a, const Rational& c) {
  return RatFunc(a.num_ + c * a.den_, a.den_);
}

RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_); }

bool ratfunc_equal(const RatFunc& a, const RatFunc& b) {
  if (a.denominator() == b.denominator()) return a.numerator() == b.numerator();
  return (a.numerator() * b.denominator() - b.numerator() * a.denominator()).is_zero();
}

bool operator==(const RatFunc& a, const RatFunc& b) { return ratfunc_equal(a, b); }

Rational RatFunc::evaluate(const Assignment& point) const {
  const Rational d = den_.evaluate(point);
  if (d == 0) throw DegenerateSpecialization("denominator vanishes at the evaluation point");
  return num_.evaluate(point) / d;
}

RatFunc substitute(const RatFunc& f, const Bindings& bindings) {
  MPoly den = substitute(f.denominator(), bindings);
  if (den.is_zero()) {
    throw DegenerateSpecialization("substitution makes the denominator identically zero");
  }
  return RatFunc(substitute(f.numerator(), bindings), std::move(den));
}

}  // namespace trisum
