// Copyright 2026 The Polsum Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef POLSUM_CLI_H_
#define POLSUM_CLI_H_

#include <memory>
#include <ostream>
#include <string>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "polsum/llm_provider.h"

namespace polsum {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;             // I/O, parse, usage
inline constexpr int kExitBlowup = 2;            // StateBlowup, CubeBlowup
inline constexpr int kExitProvider = 3;          // provider failure, strict
inline constexpr int kExitInsufficient = 4;      // InsufficientLanguage

int ExitCodeFor(const absl::Status& status);

// Builds "mock" or "http" from an optional JSON config file, wrapped for
// retries.
absl::StatusOr<std::unique_ptr<LlmProvider>> MakeProvider(
    const std::string& kind, const std::string& config_path);

// Runs the command line `args` (without the program name). Reports go to
// `out` or to the --out file; diagnostics go to `err`.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

}  // namespace polsum

#endif  // POLSUM_CLI_H_
