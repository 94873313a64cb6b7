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

#ifndef TRISUM_CLI_HPP_
#define TRISUM_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace trisum::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalidInput = 1;
inline constexpr int kExitVerificationFailed = 2;
inline constexpr int kExitUsage = 64;

// Default search bounds for the three-sum and four-sum searches.
inline constexpr unsigned long kDefaultBound = 1000;
inline constexpr unsigned long kDefaultFourSumBound = 3300;

// Runs one command line (without the program name). Results go to `out`
// (or the --out file); diagnostics and progress go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace trisum::cli

#endif  // TRISUM_CLI_HPP_
