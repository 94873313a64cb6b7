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

#include "trisum/format.hpp"

#include <array>
#include <string_view>

#include "json.hpp"
#include "trisum/exact.hpp"

namespace trisum {

namespace {

using nlohmann::ordered_json;

constexpr std::array<std::string_view, 7> kKeys{"x", "y", "z", "p", "q", "r", "s"};

void write_json(std::ostream& out, const ordered_json& doc) { out << doc.dump(2) << '\n'; }

std::string header(std::size_t width) {
  std::string line;
  for (std::size_t i = 0; i < width; ++i) {
    if (i != 0) line += ',';
    line += kKeys[i];
  }
  return line;
}

template <typename Values, typename Render>
std::string csv_row(const Values& values, Render render) {
  std::string line;
  bool first = true;
  for (const auto& v : values) {
    if (!first) line += ',';
    first = false;
    line += render(v);
  }
  return line;
}

template <typename Values, typename Render>
ordered_json json_tuple(const Values& values, Render render) {
  ordered_json obj = ordered_json::object();
  std::size_t i = 0;
  for (const auto& v : values) obj[std::string(kKeys[i++])] = render(v);
  return obj;
}

std::string int_text(const Integer& n) { return to_string(n); }
std::string compact(const Rational& q) { return to_string(q); }
std::string fraction(const Rational& q) { return to_fraction_string(q); }

template <typename Row>
void write_integer_rows(std::ostream& out, const std::vector<Row>& rows, std::size_t width,
                        OutputFormat fmt) {
  if (fmt == OutputFormat::Csv) {
    out << header(width) << '\n';
    for (const Row& row : rows) out << csv_row(row.values(), int_text) << '\n';
    return;
  }
  ordered_json doc = ordered_json::array();
  for (const Row& row : rows) doc.push_back(json_tuple(row.values(), int_text));
  write_json(out, doc);
}

ordered_json json_point(const ECPoint& pt) {
  if (pt.is_infinity()) return ordered_json{{"infinity", true}};
  return ordered_json{{"X", fraction(pt.x())}, {"Y", fraction(pt.y())}};
}

std::string verdict_text(OrderVerdict v) {
  return v == OrderVerdict::Certified ? "certified" : "inconclusive";
}

}  // namespace

void write_solutions(std::ostream& out, const std::vector<Solution6>& rows, OutputFormat fmt) {
  write_integer_rows(out, rows, 6, fmt);
}

void write_solutions(std::ostream& out, const std::vector<Solution7>& rows, OutputFormat fmt) {
  write_integer_rows(out, rows, 7, fmt);
}

void write_family(std::ostream& out, int id, const std::vector<FamilyRow>& rows,
                  OutputFormat fmt) {
  if (fmt == OutputFormat::Csv) {
    out << "u," << header(6) << '\n';
    for (const FamilyRow& row : rows) {
      out << to_string(row.u) << ',' << csv_row(row.values.values(), int_text) << '\n';
    }
    return;
  }
  ordered_json doc = ordered_json::array();
  for (const FamilyRow& row : rows) {
    ordered_json obj{{"family", id}, {"u", to_string(row.u)}};
    obj.update(json_tuple(row.values.values(), int_text));
    doc.push_back(std::move(obj));
  }
  write_json(out, doc);
}

void write_param(std::ostream& out, const Rational& u, const Rational& v, const Rational& w,
                 const Solution6Rational& sol, const std::vector<NamedCheck>& checks,
                 OutputFormat fmt) {
  if (fmt == OutputFormat::Csv) {
    out << header(6) << '\n' << csv_row(sol.values(), compact) << '\n';
    for (const NamedCheck& c : checks) {
      out << "# " << (c.ok ? "PASS" : "FAIL") << ' ' << c.name << '\n';
    }
    return;
  }
  ordered_json doc{{"u", fraction(u)}, {"v", fraction(v)}, {"w", fraction(w)}};
  doc["solution"] = json_tuple(sol.values(), fraction);
  ordered_json list = ordered_json::array();
  for (const NamedCheck& c : checks) list.push_back({{"name", c.name}, {"ok", c.ok}});
  doc["checks"] = std::move(list);
  write_json(out, doc);
}

void write_curve_report(std::ostream& out, const GenerationReport& report, OutputFormat fmt) {
  const CurveSpecialization& spec = report.specialization;
  if (fmt == OutputFormat::Csv) {
    out << "k,plus_torsion,X,Y,w,h," << header(7) << ",verified\n";
    for (const GeneratedSolution& g : report.solutions) {
      out << g.multiple << ',' << (g.plus_torsion ? 1 : 0) << ',' << fraction(g.point.x()) << ','
          << fraction(g.point.y()) << ',' << fraction(g.preimage.point.w) << ','
          << fraction(g.preimage.point.h) << ',' << csv_row(g.tuple.values(), fraction) << ','
          << (g.verified ? 1 : 0) << '\n';
    }
    return;
  }

  ordered_json doc{{"u", fraction(spec.quartic.u)}, {"v", fraction(spec.quartic.v)}};
  doc["curve"] = {{"A", fraction(spec.curve.a())}, {"B", fraction(spec.curve.b())}};
  doc["torsion"] = json_point(spec.torsion);
  doc["generator"] = json_point(spec.generator);
  ordered_json cert{{"verdict", verdict_text(report.certificate.verdict)},
                    {"scale", to_string(report.certificate.scale)}};
  if (report.certificate.verdict == OrderVerdict::Certified) {
    cert["multiple"] = report.certificate.multiple;
  }
  if (report.certificate.torsion_order) cert["torsion_order"] = *report.certificate.torsion_order;
  doc["certificate"] = std::move(cert);
  if (report.warning) doc["warning"] = *report.warning;

  ordered_json sols = ordered_json::array();
  for (const GeneratedSolution& g : report.solutions) {
    sols.push_back({{"k", g.multiple},
                    {"plus_torsion", g.plus_torsion},
                    {"point", json_point(g.point)},
                    {"w", fraction(g.preimage.point.w)},
                    {"h", fraction(g.preimage.point.h)},
                    {"root_sign", g.preimage.root_sign},
                    {"tuple", json_tuple(g.tuple.values(), fraction)},
                    {"verified", g.verified}});
  }
  doc["multiples"] = std::move(sols);
  ordered_json skipped = ordered_json::array();
  for (const SkippedMultiple& s : report.skipped) {
    skipped.push_back({{"k", s.multiple}, {"plus_torsion", s.plus_torsion}, {"reason", s.reason}});
  }
  doc["skipped"] = std::move(skipped);
  write_json(out, doc);
}

void write_identity_report(std::ostream& out, const std::vector<IdentityCheck>& checks,
                           OutputFormat fmt) {
  if (fmt == OutputFormat::Csv) {
    for (const IdentityCheck& c : checks) {
      out << status_label(c.status) << "  [" << c.group << "] " << c.name;
      if (!c.detail.empty()) out << "  -- " << c.detail;
      out << '\n';
    }
    return;
  }
  ordered_json doc = ordered_json::array();
  for (const IdentityCheck& c : checks) {
    doc.push_back({{"group", c.group},
                   {"name", c.name},
                   {"status", status_label(c.status)},
                   {"detail", c.detail}});
  }
  write_json(out, doc);
}

}  // namespace trisum
