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

#ifndef POLSUM_STATUS_H_
#define POLSUM_STATUS_H_

#include <optional>
#include <string>

#include "absl/status/status.h"

namespace polsum {

// Domain error classes. Each maps onto a canonical absl::StatusCode and is
// additionally tagged with a payload so callers can tell, e.g., a syntax error
// from a schema error even though both are kInvalidArgument.
enum class ErrorKind {
  kSyntax,                // malformed policy / regex text
  kSchema,                // well-formed text that violates the policy schema
  kAlphabet,              // character outside printable ASCII 32..126
  kUnsupportedConstruct,  // regex feature outside the supported dialect
  kStateBlowup,           // automaton construction exceeded the state cap
  kCubeBlowup,            // request set exceeded the cube cap
  kEmptyLanguage,         // sampling from a regex with no strings
  kInsufficientLanguage,  // request sampling side has no members
  kProvider,              // LLM transport failure after retries
  kCandidateUnparseable,  // LLM output was not a supported regex
};

std::string ErrorKindName(ErrorKind kind);

absl::Status MakeError(ErrorKind kind, std::string message);

// Returns the domain error kind attached to `status`, if any.
std::optional<ErrorKind> GetErrorKind(const absl::Status& status);

inline bool IsErrorKind(const absl::Status& status, ErrorKind kind) {
  return GetErrorKind(status) == kind;
}

}  // namespace polsum

#define POLSUM_RETURN_IF_ERROR(expr)      \
  do {                                    \
    absl::Status _polsum_status = (expr); \
    if (!_polsum_status.ok()) return _polsum_status; \
  } while (0)

#define POLSUM_CONCAT_INNER_(a, b) a##b
#define POLSUM_CONCAT_(a, b) POLSUM_CONCAT_INNER_(a, b)

#define POLSUM_ASSIGN_OR_RETURN(lhs, rexpr) \
  POLSUM_ASSIGN_OR_RETURN_IMPL_(POLSUM_CONCAT_(_polsum_or_, __LINE__), lhs, rexpr)

#define POLSUM_ASSIGN_OR_RETURN_IMPL_(tmp, lhs, rexpr) \
  auto tmp = (rexpr);                                   \
  if (!tmp.ok()) return tmp.status();                   \
  lhs = std::move(*tmp)

#endif  // POLSUM_STATUS_H_
