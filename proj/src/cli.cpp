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

#include "trisum/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "trisum/curve.hpp"
#include "trisum/errors.hpp"
#include "trisum/exact.hpp"
#include "trisum/families.hpp"
#include "trisum/format.hpp"
#include "trisum/identities.hpp"
#include "trisum/param3.hpp"
#include "trisum/search.hpp"
#include "trisum/triangular.hpp"

namespace trisum::cli {

namespace {

namespace fs = std::filesystem;

struct RunConfig {
  OutputFormat format = OutputFormat::Csv;
  std::string out_path;

  std::optional<std::uint64_t> bound;
  bool four = false;
  bool distinct = false;
  unsigned workers = 1;

  int family_id = 1;
  long long u_from = 0;
  long long u_to = 10;

  std::string u, v, w;
  int multiples = 5;
  bool with_torsion = false;
};

// Result of a subcommand: rendered text plus exit code.
struct Outcome {
  std::string text;
  int code = kExitOk;
};

const CLI::Validator kRationalLiteral(
    [](std::string& text) -> std::string {
      try {
        parse_rational(text);
        return {};
      } catch (const std::exception& e) {
        return e.what();
      }
    },
    "RATIONAL", "rational literal a/b or a");

Outcome run_search(const RunConfig& cfg, std::ostream& err) {
  SearchOptions opts;
  opts.workers = cfg.workers;
  const std::uint64_t bound = cfg.bound.value_or(cfg.four ? kDefaultFourSumBound : kDefaultBound);
  std::ostringstream text;
  if (!cfg.four) {
    err << "searching three-sum system below " << bound << '\n';
    const auto rows = solve_system1(bound, opts);
    err << "found " << rows.size() << " solutions\n";
    write_solutions(text, rows, cfg.format);
  } else {
    err << "searching four-sum system below " << bound
        << (cfg.distinct ? " (pairwise distinct)" : "") << '\n';
    const auto rows = solve_system3(bound, cfg.distinct, opts);
    err << "found " << rows.size() << " solutions\n";
    if (cfg.distinct) {
      for (const Solution7& row : rows) {
        if (is_known_distinct_solution(row)) continue;
        err << "note: (";
        for (std::size_t i = 0; i < row.values().size(); ++i) {
          err << (i ? "," : "") << to_string(row.values()[i]);
        }
        err << ") is not among the four known distinct solutions\n";
      }
    }
    write_solutions(text, rows, cfg.format);
  }
  return {text.str(), kExitOk};
}

Outcome run_family(const RunConfig& cfg) {
  if (cfg.u_from < 0 || cfg.u_to < cfg.u_from) {
    throw DomainError("family range needs 0 <= u-from <= u-to");
  }
  std::vector<FamilyRow> rows;
  for (long long u = cfg.u_from; u <= cfg.u_to; ++u) {
    const Integer n(static_cast<long>(u));
    rows.push_back(FamilyRow{n, family_eval(cfg.family_id, n)});
  }
  std::ostringstream text;
  write_family(text, cfg.family_id, rows, cfg.format);
  return {text.str(), kExitOk};
}

Outcome run_param(const RunConfig& cfg) {
  const Rational u = parse_rational(cfg.u), v = parse_rational(cfg.v), w = parse_rational(cfg.w);
  const Solution6Rational sol = closed_form_eval(u, v, w);

  auto holds = [](const Rational& a, const Rational& b) { return a == b; };
  const Rational tx = tri_rational(sol.x()), ty = tri_rational(sol.y()), tz = tri_rational(sol.z());
  std::vector<NamedCheck> checks{
      {"t_x + t_y = t_p", holds(tx + ty, tri_rational(sol.p()))},
      {"t_y + t_z = t_q", holds(ty + tz, tri_rational(sol.q()))},
      {"t_z + t_x = t_r", holds(tz + tx, tri_rational(sol.r()))},
      {"closed form = linear solve", sol == parametric_linear_solve(u, v, w)},
  };
  const bool ok = std::all_of(checks.begin(), checks.end(), [](const NamedCheck& c) { return c.ok; });
  std::ostringstream text;
  write_param(text, u, v, w, sol, checks, cfg.format);
  return {text.str(), ok ? kExitOk : kExitVerificationFailed};
}

Outcome run_curve(const RunConfig& cfg, std::ostream& err) {
  const Rational u = parse_rational(cfg.u), v = parse_rational(cfg.v);
  const GenerationReport report = generate_solutions(u, v, cfg.multiples, cfg.with_torsion);
  if (report.warning) err << "warning: " << *report.warning << '\n';
  for (const SkippedMultiple& s : report.skipped) {
    err << "skipped k=" << s.multiple << (s.plus_torsion ? " (+T)" : "") << ": " << s.reason
        << '\n';
  }
  const bool ok = std::all_of(report.solutions.begin(), report.solutions.end(),
                              [](const GeneratedSolution& g) { return g.verified; });
  std::ostringstream text;
  write_curve_report(text, report, cfg.format);
  return {text.str(), ok ? kExitOk : kExitVerificationFailed};
}

Outcome run_verify(const RunConfig& cfg, std::ostream& err) {
  const auto checks = run_identity_suite();
  std::map<CheckStatus, int> tally;
  for (const IdentityCheck& c : checks) ++tally[c.status];
  err << checks.size() << " identities: " << tally[CheckStatus::Pass] << " pass, "
      << tally[CheckStatus::Erratum] << " listed-form errata, " << tally[CheckStatus::Fail]
      << " fail\n";
  std::ostringstream text;
  write_identity_report(text, checks, cfg.format);
  return {text.str(), suite_passed(checks) ? kExitOk : kExitVerificationFailed};
}

// Writes next to the target, then renames over it.
void write_atomically(const fs::path& target, const std::string& text) {
  fs::path tmp = target;
  tmp += ".partial";
  {
    std::ofstream file(tmp, std::ios::binary | std::ios::trunc);
    if (!file) throw std::runtime_error("cannot open " + tmp.string());
    file << text;
    file.flush();
    if (!file) {
      file.close();
      fs::remove(tmp);
      throw std::runtime_error("write failed for " + tmp.string());
    }
  }
  fs::rename(tmp, target);
}

void add_output_flags(CLI::App& sub, RunConfig& cfg) {
  sub.add_option("--format", cfg.format, "csv or json")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, OutputFormat>{{"csv", OutputFormat::Csv},
                                              {"json", OutputFormat::Json}},
          CLI::ignore_case));
  sub.add_option("--out", cfg.out_path, "write to FILE (atomically) instead of stdout");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Exact solver for sums of triangular numbers", "trisum"};
  app.require_subcommand(1);

  auto* search = app.add_subcommand("search", "enumerate integer solutions below a bound");
  search->add_option("--max", cfg.bound, "exclusive bound on x, y, z")
      ->check(CLI::Range(std::uint64_t{3}, kMaxSearchBound));
  search->add_flag("--four", cfg.four, "also require t_x + t_y + t_z = t_s");
  search->add_flag("--distinct", cfg.distinct, "only pairwise distinct 7-tuples")->needs("--four");
  search->add_option("--workers", cfg.workers, "worker threads (0: all cores)");
  add_output_flags(*search, cfg);

  auto* fam = app.add_subcommand("family", "evaluate a polynomial family over a u-range");
  fam->add_option("--which", cfg.family_id, "family id")->check(CLI::IsMember({1, 2}));
  fam->add_option("--u-from", cfg.u_from, "first u (>= 0)");
  fam->add_option("--u-to", cfg.u_to, "last u");
  add_output_flags(*fam, cfg);

  auto* param = app.add_subcommand("param", "evaluate the three-parameter rational solution");
  param->add_option("--u", cfg.u)->required()->check(kRationalLiteral);
  param->add_option("--v", cfg.v)->required()->check(kRationalLiteral);
  param->add_option("--w", cfg.w)->required()->check(kRationalLiteral);
  add_output_flags(*param, cfg);

  auto* curve = app.add_subcommand("curve", "generate four-sum solutions from multiples of P");
  curve->add_option("--u", cfg.u)->required()->check(kRationalLiteral);
  curve->add_option("--v", cfg.v)->required()->check(kRationalLiteral);
  curve->add_option("--multiples", cfg.multiples, "largest multiple k")
      ->check(CLI::Range(1, 64));
  curve->add_flag("--with-torsion", cfg.with_torsion, "also use kP + T");
  add_output_flags(*curve, cfg);

  auto* verify = app.add_subcommand("verify", "run the symbolic identity suite");
  add_output_flags(*verify, cfg);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kExitOk;
    }
    err << "usage error: " << e.what() << '\n' << "run with --help for usage\n";
    return kExitUsage;
  }

  Outcome outcome;
  try {
    if (search->parsed()) {
      outcome = run_search(cfg, err);
    } else if (fam->parsed()) {
      outcome = run_family(cfg);
    } else if (param->parsed()) {
      outcome = run_param(cfg);
    } else if (curve->parsed()) {
      outcome = run_curve(cfg, err);
    } else {
      outcome = run_verify(cfg, err);
    }
  } catch (const DegenerateParameters& e) {
    err << "degenerate parameters: " << e.what() << '\n';
    return kExitInvalidInput;
  } catch (const DomainError& e) {
    err << "invalid input: " << e.what() << '\n';
    return kExitInvalidInput;
  }

  if (cfg.out_path.empty()) {
    out << outcome.text;
  } else {
    try {
      write_atomically(cfg.out_path, outcome.text);
    } catch (const std::exception& e) {
      err << "output error: " << e.what() << '\n';
      return kExitInvalidInput;
    }
  }
  return outcome.code;
}

}  // namespace trisum::cli
