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

#ifndef POLSUM_REGEX_PARSER_H_
#define POLSUM_REGEX_PARSER_H_

#include <string_view>

#include "absl/status/statusor.h"
#include "polsum/regex.h"

namespace polsum {

// Largest bound accepted in `{m}` / `{m,n}` / `{m,}`.
inline constexpr int kMaxRepeatBound = 64;

// Parses the supported regex dialect (docs/regex_dialect.md) into a core
// Regex. Matching is always whole-string: a leading `^` and a trailing `$`
// are accepted and dropped. Sugar is expanded: `R+` to `RR*`, `R?` to `R|()`,
// and bounded repeats to explicit copies.
//
// Errors: SyntaxError, UnsupportedConstruct (lookaround, backreferences,
// lazy/possessive quantifiers, named groups, inline flags, bounds above
// kMaxRepeatBound), AlphabetError.
absl::StatusOr<Regex> ParseRegex(std::string_view text);

}  // namespace polsum

#endif  // POLSUM_REGEX_PARSER_H_
