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

#include "polsum/wildcard.h"

#include <string>
#include <string_view>

#include "polsum/alphabet.h"
#include "polsum/status.h"

namespace polsum {

absl::StatusOr<WildcardPattern> WildcardPattern::FromGlob(
    std::string_view text) {
  POLSUM_RETURN_IF_ERROR(CheckAlphabet(text));
  WildcardPattern p;
  for (char c : text) {
    if (c == '*') {
      // Adjacent stars are one star.
      if (!p.elements_.empty() &&
          p.elements_.back().kind == ElementKind::kAnyString) {
        continue;
      }
      p.elements_.push_back({ElementKind::kAnyString});
    } else if (c == '?') {
      p.elements_.push_back({ElementKind::kAnyChar});
    } else {
      p.elements_.push_back({ElementKind::kLiteral, c});
    }
  }
  return p;
}

absl::StatusOr<WildcardPattern> WildcardPattern::FromLiteral(
    std::string_view text) {
  POLSUM_RETURN_IF_ERROR(CheckAlphabet(text));
  WildcardPattern p;
  for (char c : text) p.elements_.push_back({ElementKind::kLiteral, c});
  return p;
}

bool WildcardPattern::IsLiteral() const {
  for (const Element& e : elements_) {
    if (e.kind != ElementKind::kLiteral) return false;
  }
  return true;
}

std::string WildcardPattern::ToString() const {
  std::string out;
  for (const Element& e : elements_) {
    switch (e.kind) {
      case ElementKind::kLiteral:
        out += e.literal;
        break;
      case ElementKind::kAnyString:
        out += '*';
        break;
      case ElementKind::kAnyChar:
        out += '?';
        break;
    }
  }
  return out;
}

}  // namespace polsum
