// Copyright 2026 The superdiscord Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace superdiscord::cli {

enum ExitCode : int {
  kOk = 0,
  kInputError = 2,
  kNoConvergence = 3,
  kGapExceeded = 4,
};

/// Column order of `sweep` CSV output.
inline const std::vector<std::string> kSweepColumns = {
    "param", "S_AB", "S_B",   "cond_entropy_strong", "cond_entropy_weak", "I",
    "D_s",   "D_w",  "delta", "D_w_post",            "gap"};

/// Runs one command. args excludes the program name. Results go to out (or
/// to --out PATH), diagnostics to err. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace superdiscord::cli
