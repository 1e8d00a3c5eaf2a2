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

#ifndef POLSUM_TESTS_TESTING_HELPERS_H_
#define POLSUM_TESTS_TESTING_HELPERS_H_

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <string_view>

#include "polsum/automaton.h"
#include "polsum/policy.h"
#include "polsum/regex.h"
#include "polsum/regex_parser.h"
#include "polsum/wildcard.h"

namespace polsum::testing {

// Unwraps a StatusOr, aborting the test binary with the status on failure.
template <typename T>
T Must(absl::StatusOr<T> value) {
  if (!value.ok()) {
    std::cerr << "unexpected error: " << value.status() << "\n";
    std::abort();
  }
  return *std::move(value);
}

inline std::string TestdataPath(std::string_view relative) {
  return std::string(POLSUM_TESTDATA_DIR) + "/" + std::string(relative);
}

inline std::string ReadTestdata(std::string_view relative) {
  std::ifstream in(TestdataPath(relative));
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline PolicyDocument LoadPolicy(std::string_view name) {
  return Must(ParsePolicy(ReadTestdata("policies/" + std::string(name))));
}

inline Dfa GlobDfa(std::string_view glob) {
  return Must(DfaFromPattern(Must(WildcardPattern::FromGlob(glob))));
}

inline Regex Re(std::string_view text) { return Must(ParseRegex(text)); }

inline Dfa ReDfa(std::string_view text) { return Must(DfaFromRegex(Re(text))); }

inline bool Eq(const Dfa& a, const Dfa& b) { return Must(Equivalent(a, b)); }

inline bool In(const Dfa& a, std::string_view s) { return Must(Accepts(a, s)); }

// Corpus files under testdata/policies.
inline constexpr const char* kCorpus[] = {
    "any_resource.json",
    "deny_all.json",
    "logs.json",
    "logs_and_backups.json",
    "music_bucket.json",
    "not_action.json",
    "not_principal.json",
    "overlapping_buckets.json",
    "project_data.json",
    "single_char_resource.json",
    "tagged_access.json",
};

}  // namespace polsum::testing

#endif  // POLSUM_TESTS_TESTING_HELPERS_H_
