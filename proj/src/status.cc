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

#include "polsum/status.h"

#include <array>
#include <optional>
#include <string>
#include <utility>

#include "absl/status/status.h"
#include "absl/strings/cord.h"

namespace polsum {
namespace {

constexpr char kErrorKindUrl[] = "type.polsum/error_kind";

constexpr std::array<ErrorKind, 10> kAllKinds = {
    ErrorKind::kSyntax,          ErrorKind::kSchema,
    ErrorKind::kAlphabet,        ErrorKind::kUnsupportedConstruct,
    ErrorKind::kStateBlowup,     ErrorKind::kCubeBlowup,
    ErrorKind::kEmptyLanguage,   ErrorKind::kInsufficientLanguage,
    ErrorKind::kProvider,        ErrorKind::kCandidateUnparseable,
};

absl::StatusCode CodeFor(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kSyntax:
    case ErrorKind::kSchema:
    case ErrorKind::kAlphabet:
    case ErrorKind::kCandidateUnparseable:
      return absl::StatusCode::kInvalidArgument;
    case ErrorKind::kUnsupportedConstruct:
      return absl::StatusCode::kUnimplemented;
    case ErrorKind::kStateBlowup:
    case ErrorKind::kCubeBlowup:
      return absl::StatusCode::kResourceExhausted;
    case ErrorKind::kEmptyLanguage:
    case ErrorKind::kInsufficientLanguage:
      return absl::StatusCode::kFailedPrecondition;
    case ErrorKind::kProvider:
      return absl::StatusCode::kUnavailable;
  }
  return absl::StatusCode::kUnknown;
}

}  // namespace

std::string ErrorKindName(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kSyntax:
      return "SyntaxError";
    case ErrorKind::kSchema:
      return "SchemaError";
    case ErrorKind::kAlphabet:
      return "AlphabetError";
    case ErrorKind::kUnsupportedConstruct:
      return "UnsupportedConstruct";
    case ErrorKind::kStateBlowup:
      return "StateBlowup";
    case ErrorKind::kCubeBlowup:
      return "CubeBlowup";
    case ErrorKind::kEmptyLanguage:
      return "EmptyLanguage";
    case ErrorKind::kInsufficientLanguage:
      return "InsufficientLanguage";
    case ErrorKind::kProvider:
      return "ProviderError";
    case ErrorKind::kCandidateUnparseable:
      return "CandidateUnparseable";
  }
  return "Unknown";
}

absl::Status MakeError(ErrorKind kind, std::string message) {
  absl::Status status(CodeFor(kind), ErrorKindName(kind) + ": " + message);
  status.SetPayload(kErrorKindUrl, absl::Cord(ErrorKindName(kind)));
  return status;
}

std::optional<ErrorKind> GetErrorKind(const absl::Status& status) {
  auto payload = status.GetPayload(kErrorKindUrl);
  if (!payload.has_value()) return std::nullopt;
  std::string name(*payload);
  for (ErrorKind kind : kAllKinds) {
    if (ErrorKindName(kind) == name) return kind;
  }
  return std::nullopt;
}

}  // namespace polsum
