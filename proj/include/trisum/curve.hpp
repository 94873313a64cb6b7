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

#ifndef TRISUM_CURVE_HPP_
#define TRISUM_CURVE_HPP_

// Elliptic-curve route to the four-sum system.
//
// Substituting the three-parameter solution into t_x + t_y + t_z = t_s and
// using 8 t_s + 1 = (2s+1)^2 gives, after clearing the common denominator
// D(u,v,w)^2, the quartic
//
//   C:  h^2 = a4 w^4 + a3 w^3 + a2 w^2 + a1 w + a0,   h = +-(2s+1) D
//
// over Q(u,v). Its leading coefficient is a square, a4 = s4^2, and C is
// birational to
//
//   E:  Y^2 = X^3 - 27 f X - 27 g
//
// where f = I/256 and g = J/4096 for the classical quartic invariants I, J.
// Writing t = a4 w + a3/4 (which kills the cubic term of a4^3 h(w)):
//
//   t = (16 s4^3 Y - 27 d) / (24 a4 X - 54 c),
//   w = (t - a3/4) / a4,
//   h = (-t^2 + 8 a4 X / 9 + c) / s4^3,
//
// with c = (3 a3^2 - 8 a2 a4)/48 and d = (8 a1 a4^2 - 4 a2 a3 a4 + a3^3)/32.
// E carries the 2-torsion point T = (X_T, 0) and the point P = (P_X, P_Y);
// multiples k P (+ T) pulled back to C give infinitely many rational
// solutions whenever P has infinite order.

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "trisum/multipoly.hpp"
#include "trisum/solution.hpp"

namespace trisum {

// Q[u,v].
const Variables& curve_variables();

struct CurveData {
  MPoly a0, a1, a2, a3, a4;
  MPoly s4;  // (u+1)(1+u-2v+2uv+v^2+uv^2), s4^2 = a4
  MPoly f, g;
  MPoly c, d;
  MPoly torsion_x;              // X_T
  MPoly point_x, point_y;       // P

  std::array<const MPoly*, 5> quartic() const { return {&a0, &a1, &a2, &a3, &a4}; }
};

const CurveData& symbolic_curve_data();

// Earlier transcriptions of a1, f and c, each off by one factor or
// coefficient. Not used by any computation; the identity suite reports
// how far they are from the consistent forms.
struct TranscribedVariants {
  MPoly a1, f, c;
};
const TranscribedVariants& transcribed_variants();

struct QuarticPoint {
  Rational w, h;
  friend bool operator==(const QuarticPoint&, const QuarticPoint&) = default;
};

struct QuarticModel {
  Rational u, v;
  std::array<Rational, 5> a;  // a[k] multiplies w^k
  Rational s4;
  Rational c, d;

  Rational value(const Rational& w) const;
  bool contains(const QuarticPoint& pt) const;
  // Invariants I = 12 a4 a0 - 3 a3 a1 + a2^2 and
  // J = 72 a4 a2 a0 + 9 a3 a2 a1 - 27 a4 a1^2 - 27 a0 a3^2 - 2 a2^3.
  Rational invariant_i() const;
  Rational invariant_j() const;
};

class ECPoint {
 public:
  static ECPoint infinity() { return ECPoint(); }
  static ECPoint affine(Rational x, Rational y) { return ECPoint(std::move(x), std::move(y)); }

  bool is_infinity() const { return !xy_.has_value(); }
  // Precondition: affine.
  const Rational& x() const { return xy_->first; }
  const Rational& y() const { return xy_->second; }

  friend bool operator==(const ECPoint&, const ECPoint&) = default;

 private:
  ECPoint() = default;
  ECPoint(Rational x, Rational y) : xy_(std::in_place, std::move(x), std::move(y)) {}

  std::optional<std::pair<Rational, Rational>> xy_;
};

// Y^2 = X^3 + A X + B over Q.
class WeierstrassCurve {
 public:
  // Throws DegenerateSpecialization when 4A^3 + 27B^2 == 0.
  WeierstrassCurve(Rational a, Rational b);

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  Rational discriminant_core() const;  // 4A^3 + 27B^2
  bool is_integral() const;
  bool contains(const ECPoint& pt) const;

  friend bool operator==(const WeierstrassCurve&, const WeierstrassCurve&) = default;

 private:
  Rational a_, b_;
};

// Group law; every operand must lie on `curve` (DomainError otherwise).
ECPoint ec_neg(const WeierstrassCurve& curve, const ECPoint& pt);
ECPoint ec_add(const WeierstrassCurve& curve, const ECPoint& lhs, const ECPoint& rhs);
ECPoint ec_double(const WeierstrassCurve& curve, const ECPoint& pt);
ECPoint ec_mul(const WeierstrassCurve& curve, const ECPoint& pt, long long n);

struct CurveSpecialization {
  QuarticModel quartic;
  WeierstrassCurve curve;
  ECPoint torsion;    // T
  ECPoint generator;  // P
};

// Throws QuarticDegenerate when a4(u,v) = 0 and DegenerateSpecialization
// when the quartic or the curve is singular.
CurveSpecialization specialize_curve(const Rational& u, const Rational& v);

enum class OrderVerdict { Certified, Inconclusive };

struct OrderCertificate {
  OrderVerdict verdict = OrderVerdict::Inconclusive;
  int multiple = 0;                 // k with k R non-integral (Certified)
  std::optional<int> torsion_order; // k with k R = O, when found
  Integer scale = 1;                // lambda of the model change used
};

// Largest multiple examined; rational torsion has order at most 12.
inline constexpr int kMaxTorsionOrder = 12;

// Nagell-Lutz: on an integral model, torsion points have integer
// coordinates. Certified iff some k R, 1 <= k <= 12, is affine with a
// non-integral coordinate. Throws DomainError when A or B is not integral.
OrderCertificate certify_infinite_order(const WeierstrassCurve& curve, const ECPoint& pt);

// Smallest lambda > 0 with lambda^4 A and lambda^6 B integral (see
// integral_scale), the scaled curve, and (X,Y) -> (lambda^2 X, lambda^3 Y).
Integer integral_scale(const WeierstrassCurve& curve);
WeierstrassCurve scale_curve(const WeierstrassCurve& curve, const Integer& lambda);
ECPoint scale_point(const ECPoint& pt, const Integer& lambda);

// Applies the integral model change, then certifies.
OrderCertificate certify_after_model_change(const WeierstrassCurve& curve, const ECPoint& pt);

struct QuarticImage {
  QuarticPoint point;
  int root_sign = 1;  // sign of s4 that produced a point on the quartic
};

// Pulls an affine point of E back to C. Throws UnmappablePoint when
// 24 a4 X - 54 c = 0, DomainError when pt is not an affine point of curve.
QuarticImage map_to_quartic(const QuarticModel& model, const WeierstrassCurve& curve,
                            const ECPoint& pt);

// Inverse of map_to_quartic for the given root sign. Throws DomainError when
// pt is not on the quartic.
ECPoint map_to_weierstrass(const QuarticModel& model, const WeierstrassCurve& curve,
                           const QuarticPoint& pt, int root_sign = 1);

struct GeneratedSolution {
  int multiple;
  bool plus_torsion;
  ECPoint point;
  QuarticImage preimage;
  Solution7Rational tuple;
  bool verified;
};

struct SkippedMultiple {
  int multiple;
  bool plus_torsion;
  std::string reason;
};

struct GenerationReport {
  CurveSpecialization specialization;
  OrderCertificate certificate;
  std::optional<std::string> warning;
  std::vector<GeneratedSolution> solutions;
  std::vector<SkippedMultiple> skipped;
};

// For k = 1..k_max and, when with_torsion, both R = kP and R = kP + T: pull
// R back to (w, h), evaluate the three-parameter solution at (u, v, w) and
// recover s from t_x + t_y + t_z. Tuples equal up to reordering x, y, z are
// reported once. Throws for a degenerate specialization; unusable
// multiples are listed in `skipped`.
GenerationReport generate_solutions(const Rational& u, const Rational& v, int k_max,
                                    bool with_torsion = true);

// The slice v = 2 in closed form, over Q[u]: the point P + T, its preimage
// (w, h) on C, and the resulting x, y, z with common denominator G.
struct SliceAtTwo {
  MPoly point_x, point_y;  // listed sign: +8(9u^2+1)^2(81u^2+1)
  RatFunc w, h;
  MPoly h_factor;          // F(u)
  RatFunc h_transcribed;   // variant with (9u+1) for (9u^2+1) and (u+1)^2 for (u+1)
  MPoly g_denominator;     // G(u)
  RatFunc x, y, z;
};
const Variables& slice_variables();
const SliceAtTwo& slice_at_two();

}  // namespace trisum

#endif  // TRISUM_CURVE_HPP_
