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

#include "trisum/identities.hpp"

#include <functional>
#include <optional>
#include <random>
#include <sstream>

#include "trisum/curve.hpp"
#include "trisum/errors.hpp"
#include "trisum/exact.hpp"
#include "trisum/families.hpp"
#include "trisum/linear.hpp"
#include "trisum/param3.hpp"
#include "trisum/triangular.hpp"

namespace trisum {

namespace {

constexpr std::size_t kShownTerms = 3;

std::string summarize(const MPoly& residual) {
  if (residual.is_zero()) return {};
  TermMap head;
  for (const auto& [e, c] : residual.terms()) {
    if (head.size() == kShownTerms) break;
    head.emplace(e, c);
  }
  std::string out = "residual " + MPoly(residual.variables(), std::move(head)).to_string();
  if (residual.term_count() > kShownTerms) {
    out += " + ... (" + std::to_string(residual.term_count()) + " terms)";
  }
  return out;
}

MPoly cross_residual(const RatFunc& a, const RatFunc& b) {
  return a.numerator() * b.denominator() - b.numerator() * a.denominator();
}

MPoly tri_poly(const MPoly& x) { return Rational(1, 2) * x * (x + 1); }

RatFunc tri_ratfunc(const RatFunc& x) { return Rational(1, 2) * (x * (x + Rational(1))); }

class Suite {
 public:
  void group(std::string name) { group_ = std::move(name); }

  void zero(std::string name, const MPoly& residual) {
    add(std::move(name), residual.is_zero() ? CheckStatus::Pass : CheckStatus::Fail,
        summarize(residual));
  }

  void equal(std::string name, const RatFunc& a, const RatFunc& b) {
    zero(std::move(name), ratfunc_equal(a, b) ? MPoly(a.variables()) : cross_residual(a, b));
  }

  void holds(std::string name, bool ok, std::string detail = {}) {
    add(std::move(name), ok ? CheckStatus::Pass : CheckStatus::Fail, ok ? std::string{} : detail);
  }

  // A listed form that should match `reference`; a mismatch is recorded as
  // an erratum only when `corrected_ok` confirms the consistent form.
  void listed(std::string name, const MPoly& residual, bool corrected_ok) {
    if (residual.is_zero()) {
      add(std::move(name), CheckStatus::Pass, {});
    } else {
      add(std::move(name), corrected_ok ? CheckStatus::Erratum : CheckStatus::Fail,
          summarize(residual));
    }
  }

  void add(std::string name, CheckStatus status, std::string detail) {
    checks_.push_back(IdentityCheck{group_, std::move(name), status, std::move(detail)});
  }

  // Runs body, turning an escaped exception into a failed check.
  void guarded(const std::string& name, const std::function<void()>& body) {
    try {
      body();
    } catch (const std::exception& e) {
      add(name, CheckStatus::Fail, std::string("threw: ") + e.what());
    }
  }

  std::vector<IdentityCheck> take() { return std::move(checks_); }

 private:
  std::string group_;
  std::vector<IdentityCheck> checks_;
};

class RationalSampler {
 public:
  explicit RationalSampler(std::uint64_t seed) : rng_(seed) {}

  Rational next() {
    std::uniform_int_distribution<long> num(-40, 40);
    std::uniform_int_distribution<long> den(1, 15);
    return make_rational(Integer(num(rng_)), Integer(den(rng_)));
  }

  Rational next_nonzero() {
    for (;;) {
      Rational q = next();
      if (q != 0) return q;
    }
  }

 private:
  std::mt19937_64 rng_;
};

// ---------------------------------------------------------------------------

void check_families(Suite& suite) {
  for (int id : {1, 2}) {
    suite.group("family " + std::to_string(id));
    const PolyFamily fam = family(id);
    const MPoly tx = tri_poly(fam.x), ty = tri_poly(fam.y), tz = tri_poly(fam.z);
    suite.zero("t_x + t_y - t_p = 0", tx + ty - tri_poly(fam.p));
    suite.zero("t_y + t_z - t_q = 0", ty + tz - tri_poly(fam.q));
    suite.zero("t_z + t_x - t_r = 0", tz + tx - tri_poly(fam.r));
    suite.zero("8(t_x + t_y) + 1 = (2p + 1)^2", 8 * (tx + ty) + 1 - pow(2 * fam.p + 1, 2));
    suite.zero("8(t_y + t_z) + 1 = (2q + 1)^2", 8 * (ty + tz) + 1 - pow(2 * fam.q + 1, 2));
    suite.zero("8(t_z + t_x) + 1 = (2r + 1)^2", 8 * (tz + tx) + 1 - pow(2 * fam.r + 1, 2));

    // With every coefficient in (1/2)Z, integrality at all integers u
    // reduces to the two residues of u mod 2.
    bool integral = true;
    for (const MPoly* m : fam.members()) {
      for (const auto& [e, c] : m->terms()) integral = integral && is_integral(Rational(2 * c));
      for (long u : {0L, 1L}) integral = integral && is_integral(m->evaluate({{"u", Rational(u)}}));
    }
    suite.holds("integral at u = 0, 1 (mod 2)", integral);
  }
}

void check_param3(Suite& suite) {
  suite.group("three-parameter solution");
  const ParamSolution& ps = closed_form_symbolic();
  const RatFunc tx = tri_ratfunc(ps.x), ty = tri_ratfunc(ps.y), tz = tri_ratfunc(ps.z);
  suite.equal("t_x + t_y = t_p", tx + ty, tri_ratfunc(ps.p));
  suite.equal("t_y + t_z = t_q", ty + tz, tri_ratfunc(ps.q));
  suite.equal("t_z + t_x = t_r", tz + tx, tri_ratfunc(ps.r));

  const Variables& vars = param_variables();
  const RatFunc u(MPoly::variable(vars, "u")), v(MPoly::variable(vars, "v")),
      w(MPoly::variable(vars, "w"));
  const Rational one(1);
  suite.equal("y = u(p - x)", ps.y, u * (ps.p - ps.x));
  suite.equal("u(y + 1) = p + x + 1", u * (ps.y + one), ps.p + ps.x + one);
  suite.equal("z = v(q - y)", ps.z, v * (ps.q - ps.y));
  suite.equal("v(z + 1) = q + y + 1", v * (ps.z + one), ps.q + ps.y + one);
  suite.equal("x = w(r - z)", ps.x, w * (ps.r - ps.z));
  suite.equal("w(x + 1) = r + z + 1", w * (ps.x + one), ps.r + ps.z + one);

  RationalSampler sampler(0x5eed0001);
  int agree = 0, tried = 0;
  std::string first_mismatch;
  bool det_ok = true;
  while (tried < 40) {
    const Rational a = sampler.next_nonzero(), b = sampler.next_nonzero(),
                   c = sampler.next_nonzero();
    const LinearSystem sys = parametric_linear_system(a, b, c);
    det_ok = det_ok && determinant(sys.matrix) == param_denominator(a, b, c);
    if (param_denominator(a, b, c) == 0) continue;
    ++tried;
    if (closed_form_eval(a, b, c) == parametric_linear_solve(a, b, c)) {
      ++agree;
    } else if (first_mismatch.empty()) {
      first_mismatch = "mismatch at (" + to_string(a) + ", " + to_string(b) + ", " + to_string(c) + ")";
    }
  }
  suite.holds("closed form = linear solve at 40 sampled points", agree == tried, first_mismatch);
  suite.holds("det of the linear system = D (sampled)", det_ok);
}

// ---------------------------------------------------------------------------

MPoly negate_u(const MPoly& p) {
  const MPoly u = MPoly::variable(p.variables(), "u");
  return substitute(p, Bindings{{"u", -u}});
}

void check_curve_symbolic(Suite& suite) {
  suite.group("quartic and curve");
  const CurveData& cd = symbolic_curve_data();

  {
    const ParamSolution& ps = closed_form_symbolic();
    const Variables& vars = param_variables();
    const MPoly& den = ps.denominator;
    MPoly lhs = pow(den, 2);
    for (const RatFunc* m : {&ps.x, &ps.y, &ps.z}) {
      const MPoly& n = m->numerator();
      lhs += 4 * (n * n + n * den);
    }
    const MPoly w = MPoly::variable(vars, "w");
    MPoly rhs(vars);
    const auto coeffs = cd.quartic();
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
      rhs += embed(*coeffs[k], vars) * pow(w, static_cast<int>(k));
    }
    suite.zero("D^2 (8(t_x + t_y + t_z) + 1) = quartic in w", lhs - rhs);
  }

  suite.zero("a4 = s4^2", cd.a4 - pow(cd.s4, 2));
  suite.zero("a0(u,v) = a4(-u,v)", cd.a0 - negate_u(cd.a4));
  suite.zero("a1(u,v) = a3(-u,v)", cd.a1 - negate_u(cd.a3));

  const MPoly inv_i = 12 * cd.a4 * cd.a0 - 3 * cd.a3 * cd.a1 + pow(cd.a2, 2);
  const MPoly inv_j = 72 * cd.a4 * cd.a2 * cd.a0 + 9 * cd.a3 * cd.a2 * cd.a1 -
                      27 * cd.a4 * pow(cd.a1, 2) - 27 * cd.a0 * pow(cd.a3, 2) -
                      2 * pow(cd.a2, 3);
  const MPoly f_res = 256 * cd.f - inv_i;
  suite.zero("f = I/256", f_res);
  suite.zero("g = J/4096", 4096 * cd.g - inv_j);
  const MPoly c_res = 48 * cd.c - (3 * pow(cd.a3, 2) - 8 * cd.a2 * cd.a4);
  suite.zero("c = (3 a3^2 - 8 a2 a4)/48", c_res);
  suite.zero("d = (8 a1 a4^2 - 4 a2 a3 a4 + a3^3)/32",
             32 * cd.d - (8 * cd.a1 * pow(cd.a4, 2) - 4 * cd.a2 * cd.a3 * cd.a4 + pow(cd.a3, 3)));

  const MPoly big_a = -27 * cd.f, big_b = -27 * cd.g;
  const MPoly& xt = cd.torsion_x;
  suite.zero("T = (X_T, 0) lies on E", pow(xt, 3) + big_a * xt + big_b);
  suite.zero("P lies on E", pow(cd.point_y, 2) - (pow(cd.point_x, 3) + big_a * cd.point_x + big_b));

  suite.group("listed forms");
  const TranscribedVariants& tv = transcribed_variants();
  suite.listed("a1 as listed", tv.a1 - cd.a1, cd.a1 == negate_u(cd.a3));
  suite.listed("f as listed", tv.f - cd.f, f_res.is_zero());
  suite.listed("c as listed", tv.c - cd.c, c_res.is_zero());
}

void check_curve_specializations(Suite& suite) {
  suite.group("specializations");
  suite.guarded("E(2,3) data and certificate", [&] {
    const CurveSpecialization spec = specialize_curve(Rational(2), Rational(3));
    suite.holds("E(2,3): A = -28802736, B = 40355763840",
                spec.curve.a() == -28802736 && spec.curve.b() == Rational(Integer("40355763840")));
    suite.holds("E(2,3): P = (5736, 252720)",
                spec.generator == ECPoint::affine(Rational(5736), Rational(252720)));
    const ECPoint twice = ec_double(spec.curve, spec.generator);
    suite.holds("E(2,3): 2P = (765489/100, -518102487/1000)",
                twice == ECPoint::affine(Rational(765489, 100), Rational(-518102487, 1000)));
    const OrderCertificate cert = certify_infinite_order(spec.curve, spec.generator);
    suite.holds("E(2,3): P certified of infinite order at k = 2",
                cert.verdict == OrderVerdict::Certified && cert.multiple == 2);
  });

  // Pull-back and push-forward are mutually inverse on multiples of P.
  suite.guarded("maps between C and E", [&] {
    const std::vector<std::pair<Rational, Rational>> params{
        {Rational(2), Rational(3)}, {Rational(3), Rational(5)}, {Rational(5, 7), Rational(2)}};
    bool ok = true;
    std::string detail;
    for (const auto& [u, v] : params) {
      const CurveSpecialization spec = specialize_curve(u, v);
      ECPoint pt = ECPoint::infinity();
      for (int k = 1; k <= 3; ++k) {
        pt = ec_add(spec.curve, pt, spec.generator);
        for (const ECPoint& r : {pt, ec_add(spec.curve, pt, spec.torsion)}) {
          if (r.is_infinity()) continue;
          const QuarticImage img = map_to_quartic(spec.quartic, spec.curve, r);
          const ECPoint back = map_to_weierstrass(spec.quartic, spec.curve, img.point, img.root_sign);
          if (!(back == r) && detail.empty()) {
            ok = false;
            detail = "round trip fails at (u,v) = (" + to_string(u) + ", " + to_string(v) + ")";
          }
        }
      }
    }
    suite.holds("E -> C -> E round trip on kP, kP + T", ok, detail);
  });
}

void check_slice(Suite& suite) {
  suite.group("slice v = 2");
  const SliceAtTwo& slice = slice_at_two();
  const CurveData& cd = symbolic_curve_data();
  const Rational two(2);

  // The quartic restricted to v = 2, over Q[u].
  std::array<MPoly, 5> coeff_v2{MPoly(slice_variables()), MPoly(slice_variables()),
                                MPoly(slice_variables()), MPoly(slice_variables()),
                                MPoly(slice_variables())};
  const auto coeffs = cd.quartic();
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    coeff_v2[k] = embed(substitute(*coeffs[k], Bindings{{"v", two}}), slice_variables());
  }
  auto on_quartic = [&](const RatFunc& w, const RatFunc& h) {
    RatFunc value(coeff_v2[4]);
    for (int k = 3; k >= 0; --k) value = value * w + RatFunc(coeff_v2[static_cast<std::size_t>(k)]);
    return cross_residual(h * h, value);
  };
  const MPoly h_res = on_quartic(slice.w, slice.h);
  suite.zero("(w, h) lies on C at v = 2", h_res);
  suite.listed("h as listed", on_quartic(slice.w, slice.h_transcribed), h_res.is_zero());

  // P2 + T2 at sampled u; the sum has degree well under the sample count.
  bool x_ok = true, y_listed = true, y_negated = true, pre_ok = true, xyz_ok = true;
  int samples = 0;
  for (long n = 2; samples < 12 && n < 100; ++n) {
    const Rational u = make_rational(Integer(n), Integer(7));
    std::optional<CurveSpecialization> maybe;
    try {
      maybe.emplace(specialize_curve(u, two));
      if (param_denominator(u, two, slice.w.evaluate({{"u", u}})) == 0) continue;
    } catch (const DomainError&) {
      continue;  // degenerate sample
    }
    const CurveSpecialization& spec = *maybe;
    const ECPoint sum = ec_add(spec.curve, spec.generator, spec.torsion);
    const Assignment at{{"u", u}};
    const Rational px = slice.point_x.evaluate(at), py = slice.point_y.evaluate(at);
    x_ok = x_ok && !sum.is_infinity() && sum.x() == px;
    y_listed = y_listed && !sum.is_infinity() && sum.y() == py;
    y_negated = y_negated && !sum.is_infinity() && sum.y() == -py;

    const QuarticPoint pre{slice.w.evaluate(at), slice.h.evaluate(at)};
    pre_ok = pre_ok &&
             map_to_weierstrass(spec.quartic, spec.curve, pre) == ECPoint::affine(px, py);

    const Solution6Rational six = closed_form_eval(u, two, pre.w);
    xyz_ok = xyz_ok && six.x() == slice.x.evaluate(at) && six.y() == slice.y.evaluate(at) &&
             six.z() == slice.z.evaluate(at);
    ++samples;
  }
  suite.holds("P2 + T2: X = 1404u^4 + 219u^2 + 4 (12 samples)", x_ok);
  if (y_listed) {
    suite.holds("P2 + T2: Y = 8(9u^2+1)^2(81u^2+1) (12 samples)", true);
  } else {
    suite.add("P2 + T2: Y = 8(9u^2+1)^2(81u^2+1) (12 samples)",
              y_negated ? CheckStatus::Erratum : CheckStatus::Fail,
              y_negated ? "sum has Y = -8(9u^2+1)^2(81u^2+1)" : "Y disagrees");
  }
  suite.holds("(w, h) maps to (X, 8(9u^2+1)^2(81u^2+1)) (12 samples)", pre_ok);
  suite.holds("x, y, z with denominator G match the closed form at w(u) (12 samples)", xyz_ok);

  for (long n : {2L, 3L}) {
    const Assignment at{{"u", Rational(n)}};
    const Rational x = slice.x.evaluate(at), y = slice.y.evaluate(at), z = slice.z.evaluate(at);
    const auto p = solve_index(tri_rational(x) + tri_rational(y));
    const auto q = solve_index(tri_rational(y) + tri_rational(z));
    const auto r = solve_index(tri_rational(z) + tri_rational(x));
    const auto s = solve_index(tri_rational(x) + tri_rational(y) + tri_rational(z));
    bool ok = p && q && r && s;
    if (ok) {
      try {
        Solution7Rational(x, y, z, *p, *q, *r, *s);
      } catch (const DomainError&) {
        ok = false;
      }
    }
    suite.holds("four-sum system at u = " + std::to_string(n), ok);
  }
}

}  // namespace

std::vector<IdentityCheck> run_identity_suite() {
  Suite suite;
  check_families(suite);
  check_param3(suite);
  check_curve_symbolic(suite);
  check_curve_specializations(suite);
  suite.guarded("slice v = 2", [&] { check_slice(suite); });
  return suite.take();
}

bool suite_passed(const std::vector<IdentityCheck>& checks) {
  for (const auto& c : checks) {
    if (c.status == CheckStatus::Fail) return false;
  }
  return true;
}

const char* status_label(CheckStatus status) {
  switch (status) {
    case CheckStatus::Pass:
      return "PASS";
    case CheckStatus::Fail:
      return "FAIL";
    case CheckStatus::Erratum:
      return "ERRATUM";
  }
  return "?";
}

}  // namespace trisum
