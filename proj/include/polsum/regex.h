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

#ifndef POLSUM_REGEX_H_
#define POLSUM_REGEX_H_

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>

#include "polsum/alphabet.h"

namespace polsum {

// Printed form of the empty-language regex. Also accepted by ParseRegex.
inline constexpr std::string_view kEmptySetToken = "\xE2\x88\x85";  // U+2205

// Immutable core regular expression:
//
//   R ::= R | R  (union)  |  R R  (concat)  |  R*  |  [class]  |  ε  |  ∅
//
// A character class is a non-empty subset of the alphabet; a single character
// is the singleton class and `.` is the full class. Nodes are shared, so
// copying a Regex is cheap.
class Regex {
 public:
  enum class Kind { kEmpty, kEpsilon, kCharClass, kConcat, kUnion, kStar };

  // Defaults to the empty language.
  Regex();

  static Regex Empty();
  static Regex Epsilon();
  // An empty set yields Empty().
  static Regex Chars(const CharSet& chars);
  static Regex Char(char c) { return Chars(CharSet::Single(c)); }
  static Regex Any() { return Chars(CharSet::Full()); }
  // Concatenation of single characters; "" yields Epsilon().
  static Regex Literal(std::string_view text);

  // Structural constructors. These build exactly the requested node.
  static Regex Union(Regex left, Regex right);
  static Regex Concat(Regex left, Regex right);
  static Regex Star(Regex inner);

  // Constructors that apply language-preserving rewrites on the fly:
  //   R·ε = ε·R = R,  ∅·R = R·∅ = ∅,  R|∅ = ∅|R = R,  R|R = R,
  //   ∅* = ε* = ε,  (R*)* = R*,  [A]|[B] = [A∪B],  ε|R* = R*.
  static Regex SimplifiedUnion(Regex left, Regex right);
  static Regex SimplifiedConcat(Regex left, Regex right);
  static Regex SimplifiedStar(Regex inner);

  Kind kind() const;
  // Valid for kCharClass only.
  const CharSet& chars() const;
  // Valid for kConcat and kUnion.
  const Regex& left() const;
  const Regex& right() const;
  // Valid for kStar.
  const Regex& inner() const;

  // Number of nodes in the tree.
  size_t size() const;
  size_t hash() const;

  // Structural equality.
  friend bool operator==(const Regex& a, const Regex& b);

 private:
  struct Node;
  explicit Regex(std::shared_ptr<const Node> node);

  std::shared_ptr<const Node> node_;
};

// Surface syntax with minimal parentheses (star binds tighter than
// concatenation, which binds tighter than union). Parsing the output yields a
// regex with the same language.
std::string PrintRegex(const Regex& regex);

// Syntactic emptiness: true iff the regex denotes the empty language.
bool IsEmptyLanguage(const Regex& regex);

}  // namespace polsum

#endif  // POLSUM_REGEX_H_
