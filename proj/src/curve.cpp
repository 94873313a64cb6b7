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

#include "trisum/curve.hpp"

#include <set>
#include <stdexcept>

#include "trisum/param3.hpp"
#include "trisum/triangular.hpp"

namespace trisum {

const Variables& curve_variables() {
  static const Variables vars{"u", "v"};
  return vars;
}

namespace {

struct Generators {
  MPoly u, v;
};

Generators generators() {
  const Variables& vars = curve_variables();
  return {MPoly::variable(vars, "u"), MPoly::variable(vars, "v")};
}

// (u^4 - 1)/(u - 1), kept as a genuine polynomial.
MPoly cubic_sum(const MPoly& u) { return pow(u, 3) + pow(u, 2) + u + 1; }

CurveData build_curve_data() {
  const auto [u, v] = generators();
  const MPoly u2 = pow(u, 2), u4 = pow(u, 4), v2 = pow(v, 2), v4 = pow(v, 4);

  CurveData cd{u, u, u, u, u, u, u, u, u, u, u, u, u};

  cd.s4 = (u + 1) * (1 + u - 2 * v + 2 * u * v + v2 + u * v2);
  cd.a4 = pow(cd.s4, 2);
  cd.a0 = pow(u - 1, 2) * pow(-1 + u + 2 * v + 2 * u * v - v2 + u * v2, 2);
  cd.a3 = 4 * (u + 1) * (v2 - 1) *
          (cubic_sum(u) * (v2 + 1) + 2 * (u - 1) * (u2 + 4 * u + 1) * v);
  cd.a1 = 4 * (u - 1) * (v2 - 1) *
          ((u - 1) * (u2 + 1) * (v2 + 1) + 2 * (u + 1) * (u2 - 4 * u + 1) * v);
  cd.a2 = 4 * (1 - 10 * u2 + u4) * v2 + 8 * (u4 - 1) * v * (1 + v2) +
          2 * (3 + 2 * u2 + 3 * u4) * (1 + v4);

  const MPoly u6 = pow(u, 6), u8 = pow(u, 8), v6 = pow(v, 6), v8 = pow(v, 8);
  cd.f = u4 * (v8 + 1) + 4 * u2 * (u4 - 1) * v * (v6 + 1) +
         (1 + 8 * u2 - 22 * u4 + 8 * u6 + u8) * v2 * (1 + v4) +
         4 * (u4 - 1) * (u4 - 3 * u2 + 1) * pow(v, 3) * (1 + v2) +
         2 * (3 - 16 * u2 + 29 * u4 - 16 * u6 + 3 * u8) * v4;
  cd.g = (u2 * (v4 + 1) + 2 * (u4 - 1) * v * (v2 + 1) + 2 * (2 - 5 * u2 + 2 * u4) * v2) *
         (-2 * cd.f +
          3 * pow(u2 - 1, 2) * v2 * pow(1 + u2 - 2 * v + 2 * u2 * v + v2 + u2 * v2, 2));

  const MPoly u3 = pow(u, 3), u5 = pow(u, 5), v3 = pow(v, 3);
  cd.c = Rational(-4, 3) * pow(u + 1, 2) *
         (-u2 * pow(u + 1, 2) * (v8 + 1) +
          (u2 - 1) * (1 - 10 * u - 2 * u2 - 10 * u3 + u4) * v * (v6 + 1) +
          2 * pow(u - 1, 2) * (3 - 4 * u - 16 * u2 - 4 * u3 + 3 * u4) * v2 * (v4 + 1) +
          (u2 - 1) * (15 + 10 * u + 2 * u2 + 10 * u3 + 15 * u4) * v3 * (v2 + 1) +
          2 * (10 + 20 * u - 5 * u2 - 46 * u3 - 5 * u4 + 20 * u5 + 10 * u6) * v4);
  cd.d = 16 * (u - 1) * u * pow(u + 1, 4) * v * (v2 - 1) *
         (-1 + u + 2 * v + 2 * u * v - v2 + u * v2) *
         (1 + u2 - 2 * v + 2 * u2 * v + v2 + u2 * v2) *
         (-1 + u2 - 4 * v - 4 * u2 * v + 10 * v2 - 10 * u2 * v2 - 4 * v3 - 4 * u2 * v3 - v4 +
          u2 * v4);

  cd.torsion_x = 3 * u2 * (v4 + 1) + 6 * (u4 - 1) * v * (v2 + 1) + 6 * (u2 - 2) * (2 * u2 - 1) * v2;
  cd.point_x = Rational(3, 4) * ((3 - 2 * u2 + 3 * u4) * (v4 + 1) + 8 * (u4 - 1) * v * (v2 + 1) +
                                 2 * (5 - 14 * u2 + 5 * u4) * v2);
  cd.point_y = Rational(27, 8) * pow(u2 - 1, 2) * (v2 - 1) *
               ((u2 + 1) * (v4 + 1) + 4 * (u2 - 1) * v * (v2 + 1) + 6 * (u2 + 1) * v2);
  return cd;
}

TranscribedVariants build_transcribed() {
  const auto [u, v] = generators();
  const MPoly u2 = pow(u, 2), u3 = pow(u, 3), u4 = pow(u, 4), u5 = pow(u, 5), u6 = pow(u, 6),
              u8 = pow(u, 8);
  const MPoly v2 = pow(v, 2), v3 = pow(v, 3), v4 = pow(v, 4), v6 = pow(v, 6), v8 = pow(v, 8);
  TranscribedVariants t{u, u, u};
  t.a1 = 4 * (u - 1) * (v2 - 1) * (cubic_sum(u) * (v2 + 1) + 2 * (u - 1) * (u2 + 4 * u + 1) * v);
  t.f = u4 * (v8 + 1) + 4 * u2 * (u4 - 1) * v * (v6 + 1) +
        (1 + 8 * u2 - 22 * u4 + 8 * u6 + u8) * v2 * (1 + v4) +
        4 * (u4 - 1) * (u4 - 3 * u2 - 1) * v3 * (1 + v2) +
        2 * (3 - 16 * u2 + 29 * u4 - 16 * u6 + 3 * u8) * v4;
  t.c = Rational(-4, 3) * pow(u + 1, 2) *
        (-u2 * pow(u + 1, 2) * (v8 + 1) +
         (u2 - 1) * (1 - 10 * u - 2 * u2 - 10 * u3 + u4) * v * (v6 + 1) +
         2 * pow(u - 1, 2) * (3 - 4 * u - 6 * u2 - 4 * u3 + 3 * u4) * v2 * (v4 + 1) +
         pow(u - 1, 2) * (15 + 10 * u + 2 * u2 + 10 * u3 + 15 * u4) * v3 * (v2 + 1) +
         2 * (10 + 20 * u - 5 * u2 - 46 * u3 - 5 * u4 + 20 * u5 + 10 * u6) * v4);
  return t;
}

void require_on(const WeierstrassCurve& curve, const ECPoint& pt) {
  if (!curve.contains(pt)) throw DomainError("point is not on the curve");
}

Rational quartic_value(const std::array<Rational, 5>& a, const Rational& w) {
  Rational acc = a[4];
  for (int k = 3; k >= 0; --k) acc = acc * w + a[static_cast<std::size_t>(k)];
  return acc;
}

// Exponent of prime p in n (n != 0); divides it out of n.
unsigned strip_prime(Integer& n, unsigned long p) {
  unsigned e = 0;
  while (mpz_divisible_ui_p(n.get_mpz_t(), p) != 0) {
    mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
    ++e;
  }
  return e;
}

unsigned ceil_div(unsigned a, unsigned b) { return (a + b - 1) / b; }

}  // namespace

const CurveData& symbolic_curve_data() {
  static const CurveData data = build_curve_data();
  return data;
}

const TranscribedVariants& transcribed_variants() {
  static const TranscribedVariants t = build_transcribed();
  return t;
}

// ---------------------------------------------------------------------------
// Quartic model

Rational QuarticModel::value(const Rational& w) const { return quartic_value(a, w); }

bool QuarticModel::contains(const QuarticPoint& pt) const { return pt.h * pt.h == value(pt.w); }

Rational QuarticModel::invariant_i() const {
  return Rational(12 * a[4] * a[0] - 3 * a[3] * a[1] + a[2] * a[2]);
}

Rational QuarticModel::invariant_j() const {
  return Rational(72 * a[4] * a[2] * a[0] + 9 * a[3] * a[2] * a[1] - 27 * a[4] * a[1] * a[1] -
                  27 * a[0] * a[3] * a[3] - 2 * a[2] * a[2] * a[2]);
}

// ---------------------------------------------------------------------------
// Weierstrass model and group law

WeierstrassCurve::WeierstrassCurve(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {
  if (discriminant_core() == 0) throw DegenerateSpecialization("singular Weierstrass curve");
}

Rational WeierstrassCurve::discriminant_core() const {
  return Rational(4 * a_ * a_ * a_ + 27 * b_ * b_);
}

bool WeierstrassCurve::is_integral() const { return trisum::is_integral(a_) && trisum::is_integral(b_); }

bool WeierstrassCurve::contains(const ECPoint& pt) const {
  if (pt.is_infinity()) return true;
  const Rational& x = pt.x();
  return pt.y() * pt.y() == x * x * x + a_ * x + b_;
}

ECPoint ec_neg(const WeierstrassCurve& curve, const ECPoint& pt) {
  require_on(curve, pt);
  if (pt.is_infinity()) return pt;
  return ECPoint::affine(pt.x(), Rational(-pt.y()));
}

ECPoint ec_add(const WeierstrassCurve& curve, const ECPoint& lhs, const ECPoint& rhs) {
  require_on(curve, lhs);
  require_on(curve, rhs);
  if (lhs.is_infinity()) return rhs;
  if (rhs.is_infinity()) return lhs;
  const Rational &x1 = lhs.x(), &y1 = lhs.y(), &x2 = rhs.x(), &y2 = rhs.y();
  Rational slope;
  if (x1 == x2) {
    if (y1 == -y2) return ECPoint::infinity();  // inverse pair, or Y = 0 doubling
    slope = (3 * x1 * x1 + curve.a()) / (2 * y1);
  } else {
    slope = (y2 - y1) / (x2 - x1);
  }
  Rational x3 = slope * slope - x1 - x2;
  Rational y3 = slope * (x1 - x3) - y1;
  return ECPoint::affine(std::move(x3), std::move(y3));
}

ECPoint ec_double(const WeierstrassCurve& curve, const ECPoint& pt) { return ec_add(curve, pt, pt); }

ECPoint ec_mul(const WeierstrassCurve& curve, const ECPoint& pt, long long n) {
  require_on(curve, pt);
  ECPoint base = n < 0 ? ec_neg(curve, pt) : pt;
  unsigned long long k = n < 0 ? 0ULL - static_cast<unsigned long long>(n)
                               : static_cast<unsigned long long>(n);
  ECPoint acc = ECPoint::infinity();
  while (k != 0) {
    if (k & 1ULL) acc = ec_add(curve, acc, base);
    k >>= 1;
    if (k != 0) base = ec_double(curve, base);
  }
  return acc;
}

// ---------------------------------------------------------------------------
// Specialization

CurveSpecialization specialize_curve(const Rational& u, const Rational& v) {
  const CurveData& cd = symbolic_curve_data();
  const Assignment at{{"u", u}, {"v", v}};

  QuarticModel model;
  model.u = u;
  model.v = v;
  const auto coeffs = cd.quartic();
  for (std::size_t k = 0; k < coeffs.size(); ++k) model.a[k] = coeffs[k]->evaluate(at);
  if (model.a[4] == 0) throw QuarticDegenerate("leading quartic coefficient a4 vanishes");
  model.s4 = cd.s4.evaluate(at);
  if (model.s4 * model.s4 != model.a[4]) throw std::logic_error("s4^2 != a4");
  model.c = cd.c.evaluate(at);
  model.d = cd.d.evaluate(at);

  const Rational i = model.invariant_i();
  const Rational j = model.invariant_j();
  if (4 * i * i * i - j * j == 0) throw DegenerateSpecialization("quartic has a repeated root");

  WeierstrassCurve curve(Rational(-27 * cd.f.evaluate(at)), Rational(-27 * cd.g.evaluate(at)));
  ECPoint torsion = ECPoint::affine(cd.torsion_x.evaluate(at), Rational(0));
  ECPoint generator = ECPoint::affine(cd.point_x.evaluate(at), cd.point_y.evaluate(at));
  if (!curve.contains(torsion) || !curve.contains(generator)) {
    throw std::logic_error("specialized T or P is off the curve");
  }
  return CurveSpecialization{std::move(model), std::move(curve), std::move(torsion),
                             std::move(generator)};
}

// ---------------------------------------------------------------------------
// Nagell-Lutz certificate

OrderCertificate certify_infinite_order(const WeierstrassCurve& curve, const ECPoint& pt) {
  if (!curve.is_integral()) {
    throw DomainError("Nagell-Lutz certificate needs integral A and B");
  }
  require_on(curve, pt);
  OrderCertificate cert;
  ECPoint multiple = pt;
  for (int k = 1; k <= kMaxTorsionOrder; ++k) {
    if (multiple.is_infinity()) {
      cert.torsion_order = k;
      return cert;
    }
    if (!is_integral(multiple.x()) || !is_integral(multiple.y())) {
      cert.verdict = OrderVerdict::Certified;
      cert.multiple = k;
      return cert;
    }
    multiple = ec_add(curve, multiple, pt);
  }
  return cert;
}

Integer integral_scale(const WeierstrassCurve& curve) {
  Integer den_a = curve.a().get_den();
  Integer den_b = curve.b().get_den();
  Integer lambda = 1;
  constexpr unsigned long kTrialLimit = 1UL << 20;
  for (unsigned long p = 2; p < kTrialLimit && (den_a > 1 || den_b > 1); p += (p == 2 ? 1 : 2)) {
    const unsigned ea = strip_prime(den_a, p);
    const unsigned eb = strip_prime(den_b, p);
    const unsigned k = std::max(ceil_div(ea, 4), ceil_div(eb, 6));
    if (k > 0) {
      Integer pk;
      mpz_ui_pow_ui(pk.get_mpz_t(), p, k);
      lambda *= pk;
    }
  }
  // Cofactors without small prime factors: including them whole is enough
  // to clear the denominators, though possibly not minimal.
  if (den_a > 1 || den_b > 1) {
    Integer l;
    mpz_lcm(l.get_mpz_t(), den_a.get_mpz_t(), den_b.get_mpz_t());
    lambda *= l;
  }
  return lambda;
}

WeierstrassCurve scale_curve(const WeierstrassCurve& curve, const Integer& lambda) {
  const Rational l2 = Rational(lambda * lambda);
  return WeierstrassCurve(Rational(curve.a() * l2 * l2), Rational(curve.b() * l2 * l2 * l2));
}

ECPoint scale_point(const ECPoint& pt, const Integer& lambda) {
  if (pt.is_infinity()) return pt;
  const Rational l(lambda);
  return ECPoint::affine(Rational(pt.x() * l * l), Rational(pt.y() * l * l * l));
}

OrderCertificate certify_after_model_change(const WeierstrassCurve& curve, const ECPoint& pt) {
  require_on(curve, pt);
  const Integer lambda = integral_scale(curve);
  OrderCertificate cert =
      certify_infinite_order(scale_curve(curve, lambda), scale_point(pt, lambda));
  cert.scale = lambda;
  return cert;
}

// ---------------------------------------------------------------------------
// Maps between C and E

QuarticImage map_to_quartic(const QuarticModel& model, const WeierstrassCurve& curve,
                            const ECPoint& pt) {
  require_on(curve, pt);
  if (pt.is_infinity()) throw UnmappablePoint("point at infinity has no affine preimage");
  const Rational& a4 = model.a[4];
  const Rational& a3 = model.a[3];
  const Rational denom = 24 * a4 * pt.x() - 54 * model.c;
  if (denom == 0) throw UnmappablePoint("24 a4 X - 54 c vanishes");

  for (int sign : {1, -1}) {
    const Rational root = sign * model.s4;
    const Rational root3 = root * root * root;
    const Rational t = (16 * root3 * pt.y() - 27 * model.d) / denom;
    QuarticPoint q{Rational((t - a3 / 4) / a4),
                   Rational((-t * t + 8 * a4 * pt.x() / 9 + model.c) / root3)};
    if (model.contains(q)) return QuarticImage{std::move(q), sign};
  }
  throw std::logic_error("pull-back misses the quartic for both signs of s4");
}

ECPoint map_to_weierstrass(const QuarticModel& model, const WeierstrassCurve& curve,
                           const QuarticPoint& pt, int root_sign) {
  if (!model.contains(pt)) throw DomainError("point is not on the quartic");
  const Rational& a4 = model.a[4];
  const Rational root = root_sign < 0 ? Rational(-model.s4) : model.s4;
  const Rational root3 = root * root * root;
  const Rational t = a4 * pt.w + model.a[3] / 4;
  Rational x = 9 * (pt.h * root3 + t * t - model.c) / (8 * a4);
  Rational y = (t * (24 * a4 * x - 54 * model.c) + 27 * model.d) / (16 * root3);
  ECPoint out = ECPoint::affine(std::move(x), std::move(y));
  if (!curve.contains(out)) throw std::logic_error("image is off the Weierstrass curve");
  return out;
}

// ---------------------------------------------------------------------------
// Solution generator

GenerationReport generate_solutions(const Rational& u, const Rational& v, int k_max,
                                    bool with_torsion) {
  GenerationReport report{specialize_curve(u, v), {}, std::nullopt, {}, {}};
  const auto& spec = report.specialization;
  report.certificate = certify_after_model_change(spec.curve, spec.generator);
  if (report.certificate.verdict != OrderVerdict::Certified) {
    report.warning = "infinite order of P is not certified at this specialization";
  }

  std::set<std::array<Rational, 3>> seen;
  ECPoint multiple = ECPoint::infinity();
  for (int k = 1; k <= k_max; ++k) {
    multiple = ec_add(spec.curve, multiple, spec.generator);
    for (int eps = 0; eps <= (with_torsion ? 1 : 0); ++eps) {
      const bool plus_t = eps == 1;
      ECPoint pt = plus_t ? ec_add(spec.curve, multiple, spec.torsion) : multiple;
      auto skip = [&](std::string reason) {
        report.skipped.push_back(SkippedMultiple{k, plus_t, std::move(reason)});
      };
      if (pt.is_infinity()) {
        skip("point at infinity");
        continue;
      }
      QuarticImage image = [&]() -> QuarticImage {
        try {
          return map_to_quartic(spec.quartic, spec.curve, pt);
        } catch (const UnmappablePoint&) {
          return QuarticImage{{Rational(0), Rational(0)}, 0};
        }
      }();
      if (image.root_sign == 0) {
        skip("unmappable point");
        continue;
      }
      const Rational& w = image.point.w;
      std::optional<Solution6Rational> six;
      try {
        six.emplace(closed_form_eval(u, v, w));
      } catch (const DegenerateParameters& e) {
        skip(std::string("degenerate parameters: ") + e.what());
        continue;
      }
      const Rational sum = tri_rational(six->x()) + tri_rational(six->y()) + tri_rational(six->z());
      const auto s = solve_index(sum);
      if (!s) throw std::logic_error("t_x + t_y + t_z is not a rational triangular value");

      std::array<Rational, 3> key{six->x(), six->y(), six->z()};
      std::sort(key.begin(), key.end());
      if (!seen.insert(key).second) {
        skip("duplicate of an earlier tuple");
        continue;
      }

      Solution7Rational tuple(six->x(), six->y(), six->z(), six->p(), six->q(), six->r(), *s);
      // (2s+1) D = +-h ties the tuple back to the quartic point.
      const Rational twice = 2 * *s + 1;
      const Rational scaled = twice * param_denominator(u, v, w);
      const bool verified = scaled == image.point.h || scaled == -image.point.h;
      report.solutions.push_back(
          GeneratedSolution{k, plus_t, std::move(pt), std::move(image), std::move(tuple), verified});
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// Slice v = 2

const Variables& slice_variables() {
  static const Variables vars{"u"};
  return vars;
}

namespace {

MPoly upoly(std::initializer_list<long> low_to_high) {
  TermMap terms;
  std::uint32_t k = 0;
  for (long c : low_to_high) terms.emplace(Exponents{k++}, Rational(c));
  return MPoly(slice_variables(), std::move(terms));
}

SliceAtTwo build_slice() {
  const MPoly u = MPoly::variable(slice_variables(), "u");
  const MPoly u2 = pow(u, 2);
  const MPoly quartic_factor = upoly({-1, 306, 0, 1134, 6561});
  const MPoly big_f =
      upoly({1, 10404, 93636, 919836, 680886, 6388956, 1285956, 11573604, 43046721});
  const MPoly big_g = upoly({35, -33, -96264, -91008, -940410, -473850, 15956352, -18528264,
                             110008287, -23914845});
  const MPoly h_den = 9 * (u + 1) * pow(quartic_factor, 2);

  return SliceAtTwo{
      1404 * pow(u, 4) + 219 * u2 + 4,
      8 * pow(9 * u2 + 1, 2) * (81 * u2 + 1),
      RatFunc(pow(9 * u - 1, 2) * (9 * u + 1) * (63 * u2 + 17), 3 * (u + 1) * quartic_factor),
      RatFunc(8 * (9 * u - 1) * (9 * u2 + 1) * big_f, h_den),
      big_f,
      RatFunc(8 * (9 * u - 1) * (9 * u + 1) * big_f, 9 * pow(u + 1, 2) * pow(quartic_factor, 2)),
      big_g,
      RatFunc(2 * (u - 1) * pow(9 * u - 1, 2) * pow(9 * u + 1, 2) * (63 * u2 + 17) * (81 * u2 + 1),
              big_g),
      RatFunc(3 * u * (11 + 42 * u2 + 2187 * pow(u, 4)) * (1 + 2754 * u2 + 3645 * pow(u, 4)),
              big_g),
      RatFunc(2 * (27 * u2 - 18 * u - 5) * (81 * u2 - 48 * u - 1) * (135 * u2 + 18 * u + 7) *
                  (243 * pow(u, 3) - 99 * u2 + 57 * u - 1),
              3 * big_g),
  };
}

}  // namespace

const SliceAtTwo& slice_at_two() {
  static const SliceAtTwo slice = build_slice();
  return slice;
}

}  // namespace trisum
