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

#ifndef TRISUM_ERRORS_HPP_
#define TRISUM_ERRORS_HPP_

#include <stdexcept>

namespace trisum {

// Invalid argument or precondition violation (negative exponent, zero
// scaling factor, off-curve point, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Parameter triple (u,v,w) for which the three-parameter solution is not
// defined: the common denominator vanishes or one parameter is zero.
class DegenerateParameters : public DomainError {
 public:
  using DomainError::DomainError;
};

// A specialization made a denominator identically zero or produced a
// singular curve.
class DegenerateSpecialization : public DomainError {
 public:
  using DomainError::DomainError;
};

// Leading quartic coefficient a4 vanishes at the requested (u,v).
class QuarticDegenerate : public DegenerateSpecialization {
 public:
  using DegenerateSpecialization::DegenerateSpecialization;
};

// Weierstrass point whose image on the quartic has a zero denominator.
class UnmappablePoint : public DomainError {
 public:
  using DomainError::DomainError;
};

}  // namespace trisum

#endif  // TRISUM_ERRORS_HPP_
