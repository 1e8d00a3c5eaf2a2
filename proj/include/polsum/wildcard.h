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

#ifndef POLSUM_WILDCARD_H_
#define POLSUM_WILDCARD_H_

#include <string>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"

namespace polsum {

// A policy string pattern: literal characters plus the `*` (any string) and
// `?` (any single character) wildcards.
class WildcardPattern {
 public:
  enum class ElementKind { kLiteral, kAnyString, kAnyChar };
  struct Element {
    ElementKind kind;
    char literal = '\0';  // only for kLiteral

    friend bool operator==(const Element&, const Element&) = default;
  };

  WildcardPattern() = default;

  // `*` and `?` are wildcards. Fails with AlphabetError on characters outside
  // printable ASCII.
  static absl::StatusOr<WildcardPattern> FromGlob(std::string_view text);
  // Every character is literal, including `*` and `?`.
  static absl::StatusOr<WildcardPattern> FromLiteral(std::string_view text);

  const std::vector<Element>& elements() const { return elements_; }
  bool IsLiteral() const;

  // Source text. Literal `*`/`?` characters print as themselves, so a pattern
  // round-trips through the constructor it came from.
  std::string ToString() const;

  friend bool operator==(const WildcardPattern&,
                         const WildcardPattern&) = default;

 private:
  std::vector<Element> elements_;
};

}  // namespace polsum

#endif  // POLSUM_WILDCARD_H_
