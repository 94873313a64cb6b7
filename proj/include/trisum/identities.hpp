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

#ifndef TRISUM_IDENTITIES_HPP_
#define TRISUM_IDENTITIES_HPP_

// Executable regression suite for every symbolic identity the library rests
// on: the polynomial families, the three-parameter solution, the quartic and
// its Weierstrass model, and the v = 2 slice.

#include <string>
#include <vector>

namespace trisum {

enum class CheckStatus {
  Pass,
  Fail,
  // A listed form disagrees with the derivation while a corrected form
  // (checked separately) passes. Informational; not a failure.
  Erratum,
};

struct IdentityCheck {
  std::string group;
  std::string name;
  CheckStatus status;
  std::string detail;  // residual or mismatch summary; empty on Pass
};

std::vector<IdentityCheck> run_identity_suite();

// True when no check has status Fail.
bool suite_passed(const std::vector<IdentityCheck>& checks);

const char* status_label(CheckStatus status);

}  // namespace trisum

#endif  // TRISUM_IDENTITIES_HPP_
