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

// Acceptance suite: one PASS/FAIL line per criterion, each with its own
// exact checks and wall-clock limit.
//
//   acceptance                 run every criterion
//   acceptance --criterion N   run criterion N only

#include <algorithm>
#include <array>
#include <chrono>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "trisum/cli.hpp"
#include "trisum/curve.hpp"
#include "trisum/families.hpp"
#include "trisum/param3.hpp"
#include "trisum/search.hpp"
#include "trisum/triangular.hpp"

using namespace trisum;

namespace {

using Row = std::vector<long>;

// Every three-sum solution with x < y < z < 1000.
const std::vector<Row> kThreeSumReference{
    {9,13,44,16,46,45},
    {14,51,104,53,116,105},
    {20,50,209,54,215,210},
    {23,30,90,38,95,93},
    {27,124,377,127,397,378},
    {35,65,86,74,108,93},
    {35,123,629,128,641,630},
    {41,119,285,126,309,288},
    {44,245,989,249,1019,990},
    {51,69,104,86,125,116},
    {54,143,244,153,283,250},
    {62,99,322,117,337,328},
    {65,135,209,150,249,219},
    {66,195,365,206,414,371},
    {74,459,923,465,1031,926},
    {76,90,144,118,170,163},
    {77,125,132,147,182,153},
    {77,125,207,147,242,221},
    {83,284,494,296,570,501},
    {105,170,363,200,401,378},
    {105,363,390,378,533,404},
    {105,551,924,561,1076,930},
    {114,429,650,444,779,660},
    {131,174,714,218,735,726},
    {131,245,714,278,755,726},
    {135,154,531,205,553,548},
    {161,260,924,306,960,938},
    {170,469,755,499,889,774},
    {189,305,406,359,508,448},
    {216,390,854,446,939,881},
    {230,741,870,776,1143,900},
    {237,527,650,578,837,692},
    {245,714,989,755,1220,1019},
    {252,272,702,371,753,746},
    {278,370,594,463,700,656},
    {286,405,494,496,639,571},
    {293,390,854,488,939,903},
    {299,441,560,533,713,635},
    {350,629,781,720,1003,856},
    {476,634,665,793,919,818},
    {581,774,935,968,1214,1101},
    {588,645,689,873,944,906},
    {609,779,923,989,1208,1106},
    {714,798,989,1071,1271,1220},
};

// Four-sum solutions with seven distinct entries.
const std::vector<Row> kFourSumReference{
    {230, 741, 870, 776, 1143, 900, 1166},
    {609, 779, 923, 989, 1208, 1106, 1353},
    {714, 798, 989, 1071, 1271, 1220, 1458},
    {1224, 1716, 3219, 2108, 3648, 3444, 3848},
};

const Row kRepeatedEntrySolution{11, 14, 14, 18, 20, 18, 23};

Rational q(long n, long d = 1) { return make_rational(Integer(n), Integer(d)); }

class Report {
 public:
  void check(bool ok, const std::string& what) {
    lines_.push_back(std::string(ok ? "    ok   " : "    FAIL ") + what);
    ok_ = ok_ && ok;
  }
  void note(const std::string& what) { lines_.push_back("    note " + what); }
  bool ok() const { return ok_; }
  const std::vector<std::string>& lines() const { return lines_; }

 private:
  bool ok_ = true;
  std::vector<std::string> lines_;
};

std::vector<Row> parse_csv(const std::string& text) {
  std::vector<Row> rows;
  std::istringstream in(text);
  std::string line;
  std::getline(in, line);  // header
  while (std::getline(in, line)) {
    Row row;
    std::istringstream cells(line);
    for (std::string cell; std::getline(cells, cell, ',');) row.push_back(std::stol(cell));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<Row> run_search_cli(const std::vector<std::string>& args, Report& rep) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  std::string joined;
  for (const auto& a : args) joined += (joined.empty() ? "" : " ") + a;
  rep.check(code == 0, "`" + joined + "` exits 0");
  return parse_csv(out.str());
}

bool contains(const std::vector<Row>& rows, const Row& row) {
  return std::find(rows.begin(), rows.end(), row) != rows.end();
}

Row as_row(const Solution6& s) {
  Row r;
  for (const auto& v : s.values()) r.push_back(v.get_si());
  return r;
}

MPoly tri_poly(const MPoly& x) { return q(1, 2) * x * (x + 1); }
RatFunc tri_rf(const RatFunc& x) { return q(1, 2) * (x * (x + Rational(1))); }

// ---------------------------------------------------------------------------

void three_sum_below_1000(Report& rep) {
  const auto rows = run_search_cli({"search", "--max", "1000"}, rep);
  std::vector<Row> expected = kThreeSumReference;
  std::sort(expected.begin(), expected.end());
  rep.check(rows.size() == 44, "44 rows (got " + std::to_string(rows.size()) + ")");
  rep.check(rows == expected, "rows equal the reference list after sorting");
  for (const Row& anchor : {Row{9, 13, 44, 16, 46, 45}, Row{105, 363, 390, 378, 533, 404},
                            Row{714, 798, 989, 1071, 1271, 1220}}) {
    rep.check(contains(rows, anchor), "contains (" + std::to_string(anchor[0]) + "," +
                                          std::to_string(anchor[1]) + "," +
                                          std::to_string(anchor[2]) + ",...)");
  }
}

void distinct_four_sum(Report& rep) {
  const auto wide = run_search_cli({"search", "--max", "3300", "--four", "--distinct"}, rep);
  for (const Row& row : kFourSumReference) {
    rep.check(contains(wide, row), "bound 3300 contains row starting " + std::to_string(row[0]));
  }
  if (wide.size() != kFourSumReference.size()) {
    rep.note(std::to_string(wide.size() - kFourSumReference.size()) + " further rows below 3300");
  }
  const auto narrow = run_search_cli({"search", "--max", "1000", "--four", "--distinct"}, rep);
  rep.check(narrow == std::vector<Row>(kFourSumReference.begin(), kFourSumReference.begin() + 3),
            "bound 1000 yields exactly the first three rows");
}

void repeated_entries(Report& rep) {
  const auto rows = run_search_cli({"search", "--max", "20", "--four"}, rep);
  rep.check(contains(rows, kRepeatedEntrySolution), "contains (11,14,14,18,20,18,23)");
}

void families(Report& rep) {
  for (int id : {1, 2}) {
    const PolyFamily f = family(id);
    const std::string tag = "family " + std::to_string(id) + ": ";
    rep.check((tri_poly(f.x) + tri_poly(f.y) - tri_poly(f.p)).is_zero(), tag + "t_x+t_y-t_p = 0");
    rep.check((tri_poly(f.y) + tri_poly(f.z) - tri_poly(f.q)).is_zero(), tag + "t_y+t_z-t_q = 0");
    rep.check((tri_poly(f.z) + tri_poly(f.x) - tri_poly(f.r)).is_zero(), tag + "t_z+t_x-t_r = 0");
  }
  const std::vector<std::pair<int, long>> members{{1, 1}, {1, 2}, {2, 0}, {2, 1}, {2, 2}};
  for (const auto& [id, u] : members) {
    const Row row = as_row(family_eval(id, Integer(u)));
    rep.check(contains(kThreeSumReference, row),
              "family " + std::to_string(id) + " at u=" + std::to_string(u) + " is a reference row");
  }
  rep.check(as_row(family_eval(2, Integer(0))) == Row{9, 13, 44, 16, 46, 45} &&
                as_row(family_eval(2, Integer(1))) == Row{20, 50, 209, 54, 215, 210} &&
                as_row(family_eval(2, Integer(2))) == Row{35, 123, 629, 128, 641, 630},
            "family 2 at u=0,1,2 gives the listed rows");
}

void three_parameters(Report& rep) {
  const ParamSolution& ps = closed_form_symbolic();
  rep.check(ratfunc_equal(tri_rf(ps.x) + tri_rf(ps.y), tri_rf(ps.p)), "t_x+t_y = t_p over Q(u,v,w)");
  rep.check(ratfunc_equal(tri_rf(ps.y) + tri_rf(ps.z), tri_rf(ps.q)), "t_y+t_z = t_q over Q(u,v,w)");
  rep.check(ratfunc_equal(tri_rf(ps.z) + tri_rf(ps.x), tri_rf(ps.r)), "t_z+t_x = t_r over Q(u,v,w)");

  std::mt19937_64 rng(31337);
  std::uniform_int_distribution<long> num(-50, 50), den(1, 30);
  int agree = 0, tried = 0;
  while (tried < 100) {
    const Rational u = q(num(rng), den(rng)), v = q(num(rng), den(rng)), w = q(num(rng), den(rng));
    if (u == 0 || v == 0 || w == 0 || param_denominator(u, v, w) == 0) continue;
    ++tried;
    agree += closed_form_eval(u, v, w) == parametric_linear_solve(u, v, w);
  }
  rep.check(agree == 100, "closed form = Gaussian elimination on " + std::to_string(agree) +
                              "/100 random triples");
}

void certificate(Report& rep) {
  const CurveSpecialization spec = specialize_curve(q(2), q(3));
  rep.check(spec.curve.a() == -28802736, "A = -28802736");
  rep.check(spec.curve.b() == Rational(Integer("40355763840")), "B = 40355763840");
  rep.check(spec.generator == ECPoint::affine(q(5736), q(252720)), "P = (5736, 252720)");
  rep.check(spec.curve.contains(spec.generator), "P on E");
  rep.check(ec_double(spec.curve, spec.generator) ==
                ECPoint::affine(q(765489, 100), q(-518102487, 1000)),
            "2P = (765489/100, -518102487/1000)");
  const OrderCertificate cert = certify_infinite_order(spec.curve, spec.generator);
  rep.check(cert.verdict == OrderVerdict::Certified && cert.multiple == 2, "Certified at k = 2");
}

void curve_symbolic(Report& rep) {
  const CurveData& cd = symbolic_curve_data();
  auto negate_u = [](const MPoly& p) {
    return substitute(p, Bindings{{"u", -MPoly::variable(p.variables(), "u")}});
  };
  rep.check(cd.a0 == negate_u(cd.a4), "a0(u,v) = a4(-u,v)");
  rep.check(cd.a1 == negate_u(cd.a3), "a1(u,v) = a3(-u,v)");
  rep.check(cd.a4 == pow(cd.s4, 2), "a4 = ((u+1)(1+u-2v+2uv+v^2+uv^2))^2");
  const MPoly a = -27 * cd.f, b = -27 * cd.g;
  rep.check((pow(cd.torsion_x, 3) + a * cd.torsion_x + b).is_zero(), "T on E");
  rep.check((pow(cd.point_y, 2) - pow(cd.point_x, 3) - a * cd.point_x - b).is_zero(), "P on E");
}

void slice_example(Report& rep) {
  const SliceAtTwo& slice = slice_at_two();
  int x_match = 0, y_match = 0, y_negated = 0, samples = 0;
  // u = 1 is excluded: the quartic degenerates there.
  for (long n : {2L, 3L, 4L, 6L, 7L, 8L, 9L, 11L, 12L, 13L}) {
    const Rational u = q(n, 5);
    const Assignment at{{"u", u}};
    const CurveSpecialization spec = specialize_curve(u, q(2));
    const ECPoint sum = ec_add(spec.curve, spec.generator, spec.torsion);
    ++samples;
    x_match += sum.x() == slice.point_x.evaluate(at);
    y_match += sum.y() == slice.point_y.evaluate(at);
    y_negated += sum.y() == -slice.point_y.evaluate(at);
  }
  const std::string of = "/" + std::to_string(samples) + " samples";
  rep.check(x_match == samples, "P2+T2 X = 1404u^4+219u^2+4 at " + std::to_string(x_match) + of);
  rep.check(y_match == samples,
            "P2+T2 Y = 8(9u^2+1)^2(81u^2+1) at " + std::to_string(y_match) + of);
  if (y_negated == samples) {
    rep.note("P2+T2 Y = -8(9u^2+1)^2(81u^2+1) at every sample (sign opposite to the listed Y)");
  }

  for (long n : {2L, 3L}) {
    const Assignment at{{"u", q(n)}};
    const Rational x = slice.x.evaluate(at), y = slice.y.evaluate(at), z = slice.z.evaluate(at);
    const auto p = solve_index(tri_rational(x) + tri_rational(y));
    const auto qq = solve_index(tri_rational(y) + tri_rational(z));
    const auto r = solve_index(tri_rational(z) + tri_rational(x));
    const auto s = solve_index(tri_rational(x) + tri_rational(y) + tri_rational(z));
    bool ok = p && qq && r && s;
    if (ok) {
      ok = tri_rational(x) + tri_rational(y) == tri_rational(*p) &&
           tri_rational(y) + tri_rational(z) == tri_rational(*qq) &&
           tri_rational(z) + tri_rational(x) == tri_rational(*r) &&
           tri_rational(x) + tri_rational(y) + tri_rational(z) == tri_rational(*s);
    }
    rep.check(ok, "x(u), y(u), z(u) solve the four-sum system at u = " + std::to_string(n));
  }
}

void generator(Report& rep) {
  const GenerationReport report = generate_solutions(q(2), q(3), 5);
  std::set<std::array<Rational, 3>> keys;
  bool all_ok = true;
  for (const GeneratedSolution& g : report.solutions) {
    const auto& v = g.tuple.values();
    const Rational tx = tri_rational(v[0]), ty = tri_rational(v[1]), tz = tri_rational(v[2]);
    all_ok = all_ok && tx + ty == tri_rational(v[3]) && ty + tz == tri_rational(v[4]) &&
             tz + tx == tri_rational(v[5]) && tx + ty + tz == tri_rational(v[6]) && g.verified;
    std::array<Rational, 3> key{v[0], v[1], v[2]};
    std::sort(key.begin(), key.end());
    keys.insert(key);
  }
  rep.check(report.solutions.size() >= 3,
            std::to_string(report.solutions.size()) + " tuples (need >= 3)");
  rep.check(keys.size() == report.solutions.size(), "tuples distinct up to ordering x, y, z");
  rep.check(all_ok, "every tuple satisfies all four equations");
}

// Direct triple loop over 0 < x < y < z < bound.
std::vector<Solution6> naive_three_sum(long bound) {
  auto index = [](long a, long b) { return inv_tri(tri(Integer(a)) + tri(Integer(b))); };
  std::vector<Solution6> out;
  for (long x = 1; x < bound; ++x) {
    for (long y = x + 1; y < bound; ++y) {
      const auto p = index(x, y);
      if (!p) continue;
      for (long z = y + 1; z < bound; ++z) {
        const auto qq = index(y, z), r = index(z, x);
        if (qq && r) out.emplace_back(Integer(x), Integer(y), Integer(z), *p, *qq, *r);
      }
    }
  }
  return out;
}

void properties(Report& rep) {
  const auto oracle = naive_three_sum(120);
  bool search_ok = true;
  for (long bound = 3; bound <= 120; ++bound) {
    std::vector<Solution6> expected;
    for (const auto& s : oracle) {
      if (s.z() < bound) expected.push_back(s);
    }
    search_ok = search_ok && solve_system1(static_cast<std::uint64_t>(bound)) == expected;
  }
  rep.check(search_ok, "search equals the triple loop for every bound 3..120");

  std::mt19937_64 rng(4242);
  std::uniform_int_distribution<long> small(-9, 9), den(1, 5);
  int curves = 0;
  bool axioms = true;
  while (curves < 5) {
    std::optional<CurveSpecialization> spec;
    try {
      spec.emplace(specialize_curve(q(small(rng), den(rng)), q(small(rng), den(rng))));
    } catch (const DegenerateSpecialization&) {
      continue;
    }
    ++curves;
    const auto& E = spec->curve;
    const ECPoint& P = spec->generator;
    const std::vector<ECPoint> pts{P, spec->torsion, ec_mul(E, P, 2), ec_add(E, P, spec->torsion),
                                   ec_mul(E, P, -3)};
    for (const ECPoint& a : pts) {
      axioms = axioms && ec_add(E, a, ECPoint::infinity()) == a &&
               ec_add(E, a, ec_neg(E, a)).is_infinity();
      for (const ECPoint& b : pts) {
        axioms = axioms && ec_add(E, a, b) == ec_add(E, b, a);
        for (const ECPoint& c : pts) {
          axioms = axioms && ec_add(E, ec_add(E, a, b), c) == ec_add(E, a, ec_add(E, b, c));
        }
      }
    }
  }
  rep.check(axioms, "group-law axioms at 5 random specializations");

  std::uniform_int_distribution<long> n_dist(0, 1'000'000'000);
  std::uniform_int_distribution<long> num(-1000, 1'000'000), d_dist(1, 9973);
  bool tri_ok = true, index_ok = true;
  for (int i = 0; i < 10'000; ++i) {
    const Integer n(n_dist(rng));
    const auto back = inv_tri(tri(n));
    tri_ok = tri_ok && back && *back == n;
    const Rational x = q(num(rng), d_dist(rng));
    const auto s = solve_index(tri_rational(x));
    index_ok = index_ok && s && (*s == x || *s == conjugate_index(x)) && 2 * *s + 1 >= 0;
  }
  rep.check(tri_ok, "inv_tri(tri(n)) = n on 10^4 random n");
  rep.check(index_ok, "solve_index(tri_rational(x)) recovers x up to the conjugate on 10^4 random x");
}

struct Criterion {
  int id;
  const char* title;
  double limit_seconds;
  std::function<void(Report&)> body;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all{
      {1, "three-sum solutions below 1000", 5, three_sum_below_1000},
      {2, "distinct four-sum solutions", 60, distinct_four_sum},
      {3, "four-sum solution with y = z", 1, repeated_entries},
      {4, "polynomial families", 1, families},
      {5, "three-parameter solution", 30, three_parameters},
      {6, "certificate on E(2,3)", 1, certificate},
      {7, "symbolic curve identities", 60, curve_symbolic},
      {8, "worked example at v = 2", 5, slice_example},
      {9, "end-to-end generator", 5, generator},
      {10, "property suites", 60, properties},
  };
  return all;
}

bool run_one(const Criterion& c) {
  Report rep;
  const auto start = std::chrono::steady_clock::now();
  try {
    c.body(rep);
  } catch (const std::exception& e) {
    rep.check(false, std::string("unexpected exception: ") + e.what());
  }
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool in_time = elapsed <= c.limit_seconds;
  const bool ok = rep.ok() && in_time;
  std::ostringstream timing;
  timing.precision(3);
  timing << std::fixed << elapsed << " s, limit " << c.limit_seconds << " s";
  std::cout << "criterion " << c.id << ": " << (ok ? "PASS" : "FAIL") << "  " << c.title << "  ("
            << timing.str() << (in_time ? "" : ", TOO SLOW") << ")\n";
  for (const auto& line : rep.lines()) std::cout << line << '\n';
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  std::optional<int> only;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--criterion" && i + 1 < argc) {
      only = std::stoi(argv[++i]);
    } else {
      std::cerr << "usage: acceptance [--criterion N]\n";
      return 64;
    }
  }
  bool all_ok = true;
  bool ran = false;
  for (const Criterion& c : criteria()) {
    if (only && *only != c.id) continue;
    ran = true;
    all_ok = run_one(c) && all_ok;
  }
  if (!ran) {
    std::cerr << "no such criterion\n";
    return 64;
  }
  return all_ok ? 0 : 1;
}
