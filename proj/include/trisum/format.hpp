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

#ifndef TRISUM_FORMAT_HPP_
#define TRISUM_FORMAT_HPP_

// Text renderings shared by the CLI and the bindings. CSV uses LF line
// endings; JSON writes integers as decimal strings and curve rationals as
// "num/den" strings so no consumer truncates them.

#include <ostream>
#include <string>
#include <vector>

#include "trisum/curve.hpp"
#include "trisum/identities.hpp"
#include "trisum/solution.hpp"

namespace trisum {

enum class OutputFormat { Csv, Json };

void write_solutions(std::ostream& out, const std::vector<Solution6>& rows, OutputFormat fmt);
void write_solutions(std::ostream& out, const std::vector<Solution7>& rows, OutputFormat fmt);

struct FamilyRow {
  Integer u;
  Solution6 values;
};
void write_family(std::ostream& out, int id, const std::vector<FamilyRow>& rows,
                  OutputFormat fmt);

struct NamedCheck {
  std::string name;
  bool ok;
};

void write_param(std::ostream& out, const Rational& u, const Rational& v, const Rational& w,
                 const Solution6Rational& sol, const std::vector<NamedCheck>& checks,
                 OutputFormat fmt);

void write_curve_report(std::ostream& out, const GenerationReport& report, OutputFormat fmt);

void write_identity_report(std::ostream& out, const std::vector<IdentityCheck>& checks,
                           OutputFormat fmt);

}  // namespace trisum

#endif  // TRISUM_FORMAT_HPP_
