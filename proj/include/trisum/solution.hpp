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

#ifndef TRISUM_SOLUTION_HPP_
#define TRISUM_SOLUTION_HPP_

// Solution tuples of
//   t_x + t_y = t_p,  t_y + t_z = t_q,  t_z + t_x = t_r          (three sums)
// optionally extended by t_x + t_y + t_z = t_s                  (four sums).
// Construction re-verifies every equation and throws DomainError otherwise,
// so a live object is always a genuine solution.

#include <array>
#include <string>

#include "trisum/exact.hpp"
#include "trisum/triangular.hpp"

namespace trisum {

template <typename Scalar>
class BasicSolution6 {
 public:
  BasicSolution6(Scalar x, Scalar y, Scalar z, Scalar p, Scalar q, Scalar r)
      : v_{std::move(x), std::move(y), std::move(z), std::move(p), std::move(q), std::move(r)} {
    if (!satisfies_pair_sums()) throw DomainError("tuple does not satisfy the three-sum system");
  }

  const Scalar& x() const { return v_[0]; }
  const Scalar& y() const { return v_[1]; }
  const Scalar& z() const { return v_[2]; }
  const Scalar& p() const { return v_[3]; }
  const Scalar& q() const { return v_[4]; }
  const Scalar& r() const { return v_[5]; }
  const std::array<Scalar, 6>& values() const { return v_; }

  friend bool operator==(const BasicSolution6& a, const BasicSolution6& b) { return a.v_ == b.v_; }
  friend bool operator<(const BasicSolution6& a, const BasicSolution6& b) { return a.v_ < b.v_; }

 private:
  bool satisfies_pair_sums() const {
    const Scalar tx = tri_of(v_[0]), ty = tri_of(v_[1]), tz = tri_of(v_[2]);
    return tx + ty == tri_of(v_[3]) && ty + tz == tri_of(v_[4]) && tz + tx == tri_of(v_[5]);
  }

  std::array<Scalar, 6> v_;
};

template <typename Scalar>
class BasicSolution7 {
 public:
  BasicSolution7(Scalar x, Scalar y, Scalar z, Scalar p, Scalar q, Scalar r, Scalar s)
      : v_{std::move(x), std::move(y), std::move(z), std::move(p),
           std::move(q), std::move(r), std::move(s)} {
    const Scalar tx = tri_of(v_[0]), ty = tri_of(v_[1]), tz = tri_of(v_[2]);
    const bool ok = tx + ty == tri_of(v_[3]) && ty + tz == tri_of(v_[4]) &&
                    tz + tx == tri_of(v_[5]) && tx + ty + tz == tri_of(v_[6]);
    if (!ok) throw DomainError("tuple does not satisfy the four-sum system");
  }

  const Scalar& x() const { return v_[0]; }
  const Scalar& y() const { return v_[1]; }
  const Scalar& z() const { return v_[2]; }
  const Scalar& p() const { return v_[3]; }
  const Scalar& q() const { return v_[4]; }
  const Scalar& r() const { return v_[5]; }
  const Scalar& s() const { return v_[6]; }
  const std::array<Scalar, 7>& values() const { return v_; }

  BasicSolution6<Scalar> pair_sums() const {
    return BasicSolution6<Scalar>(v_[0], v_[1], v_[2], v_[3], v_[4], v_[5]);
  }

  friend bool operator==(const BasicSolution7& a, const BasicSolution7& b) { return a.v_ == b.v_; }
  friend bool operator<(const BasicSolution7& a, const BasicSolution7& b) { return a.v_ < b.v_; }

 private:
  std::array<Scalar, 7> v_;
};

using Solution6 = BasicSolution6<Integer>;
using Solution7 = BasicSolution7<Integer>;
using Solution6Rational = BasicSolution6<Rational>;
using Solution7Rational = BasicSolution7<Rational>;

}  // namespace trisum

#endif  // TRISUM_SOLUTION_HPP_
