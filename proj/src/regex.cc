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

#include "polsum/regex.h"

#include <cstddef>
#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <utility>

#include "polsum/alphabet.h"

namespace polsum {

struct Regex::Node {
  Kind kind = Kind::kEmpty;
  CharSet chars;
  Regex left{nullptr};
  Regex right{nullptr};
  size_t size = 1;
  size_t hash = 0;
};

namespace {

size_t Mix(size_t seed, size_t value) {
  return seed ^ (value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

Regex::Regex() : Regex(Empty()) {}

Regex::Regex(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

Regex Regex::Empty() {
  static const Regex* const kEmpty = [] {
    auto node = std::make_shared<Node>();
    node->kind = Kind::kEmpty;
    node->hash = Mix(0, static_cast<size_t>(Kind::kEmpty));
    return new Regex(std::move(node));
  }();
  return *kEmpty;
}

Regex Regex::Epsilon() {
  static const Regex* const kEpsilon = [] {
    auto node = std::make_shared<Node>();
    node->kind = Kind::kEpsilon;
    node->hash = Mix(0, static_cast<size_t>(Kind::kEpsilon));
    return new Regex(std::move(node));
  }();
  return *kEpsilon;
}

Regex Regex::Chars(const CharSet& chars) {
  if (chars.empty()) return Empty();
  auto node = std::make_shared<Node>();
  node->kind = Kind::kCharClass;
  node->chars = chars;
  node->hash = Mix(Mix(0, static_cast<size_t>(Kind::kCharClass)), chars.Hash());
  return Regex(std::move(node));
}

Regex Regex::Literal(std::string_view text) {
  if (text.empty()) return Epsilon();
  Regex out = Char(text.back());
  for (size_t i = text.size() - 1; i-- > 0;) out = Concat(Char(text[i]), out);
  return out;
}

namespace {

// Builds binary/unary nodes; shared by the structural constructors.
template <typename NodeT, typename RegexT>
std::shared_ptr<NodeT> MakeInterior(typename RegexT::Kind kind, RegexT left,
                                    RegexT right, bool unary) {
  auto node = std::make_shared<NodeT>();
  node->kind = kind;
  size_t h = Mix(0, static_cast<size_t>(kind));
  h = Mix(h, left.hash());
  node->size = 1 + left.size();
  if (!unary) {
    h = Mix(h, right.hash());
    node->size += right.size();
  }
  node->hash = h;
  node->left = std::move(left);
  if (!unary) node->right = std::move(right);
  return node;
}

}  // namespace

Regex Regex::Union(Regex left, Regex right) {
  return Regex(MakeInterior<Node, Regex>(Kind::kUnion, std::move(left),
                                         std::move(right), false));
}

Regex Regex::Concat(Regex left, Regex right) {
  return Regex(MakeInterior<Node, Regex>(Kind::kConcat, std::move(left),
                                         std::move(right), false));
}

Regex Regex::Star(Regex inner) {
  return Regex(MakeInterior<Node, Regex>(Kind::kStar, std::move(inner),
                                         Regex(nullptr), true));
}

Regex Regex::SimplifiedUnion(Regex left, Regex right) {
  if (left.kind() == Kind::kEmpty) return right;
  if (right.kind() == Kind::kEmpty) return left;
  if (left == right) return left;
  if (left.kind() == Kind::kCharClass && right.kind() == Kind::kCharClass) {
    return Chars(left.chars() | right.chars());
  }
  if (left.kind() == Kind::kEpsilon && right.kind() == Kind::kStar) {
    return right;
  }
  if (right.kind() == Kind::kEpsilon && left.kind() == Kind::kStar) {
    return left;
  }
  return Union(std::move(left), std::move(right));
}

Regex Regex::SimplifiedConcat(Regex left, Regex right) {
  if (left.kind() == Kind::kEmpty || right.kind() == Kind::kEmpty) {
    return Empty();
  }
  if (left.kind() == Kind::kEpsilon) return right;
  if (right.kind() == Kind::kEpsilon) return left;
  return Concat(std::move(left), std::move(right));
}

Regex Regex::SimplifiedStar(Regex inner) {
  switch (inner.kind()) {
    case Kind::kEmpty:
    case Kind::kEpsilon:
      return Epsilon();
    case Kind::kStar:
      return inner;
    default:
      return Star(std::move(inner));
  }
}

Regex::Kind Regex::kind() const { return node_->kind; }
const CharSet& Regex::chars() const { return node_->chars; }
const Regex& Regex::left() const { return node_->left; }
const Regex& Regex::right() const { return node_->right; }
const Regex& Regex::inner() const { return node_->left; }
size_t Regex::size() const { return node_->size; }
size_t Regex::hash() const { return node_->hash; }

bool operator==(const Regex& a, const Regex& b) {
  if (a.node_ == b.node_) return true;
  if (a.hash() != b.hash() || a.size() != b.size() || a.kind() != b.kind()) {
    return false;
  }
  switch (a.kind()) {
    case Regex::Kind::kEmpty:
    case Regex::Kind::kEpsilon:
      return true;
    case Regex::Kind::kCharClass:
      return a.chars() == b.chars();
    case Regex::Kind::kStar:
      return a.inner() == b.inner();
    case Regex::Kind::kConcat:
    case Regex::Kind::kUnion:
      return a.left() == b.left() && a.right() == b.right();
  }
  return false;
}

bool IsEmptyLanguage(const Regex& regex) {
  switch (regex.kind()) {
    case Regex::Kind::kEmpty:
      return true;
    case Regex::Kind::kEpsilon:
    case Regex::Kind::kCharClass:
    case Regex::Kind::kStar:
      return false;
    case Regex::Kind::kConcat:
      return IsEmptyLanguage(regex.left()) || IsEmptyLanguage(regex.right());
    case Regex::Kind::kUnion:
      return IsEmptyLanguage(regex.left()) && IsEmptyLanguage(regex.right());
  }
  return false;
}

namespace {

constexpr std::string_view kSpecialOutsideClass = "\\.*+?()[]|{}^$";
constexpr std::string_view kSpecialInsideClass = "\\]^-[";

enum Precedence { kUnionPrec = 0, kConcatPrec = 1, kStarPrec = 2, kAtomPrec = 3 };

int PrecedenceOf(const Regex& r) {
  switch (r.kind()) {
    case Regex::Kind::kUnion:
      return kUnionPrec;
    case Regex::Kind::kConcat:
      return kConcatPrec;
    case Regex::Kind::kStar:
      return kStarPrec;
    default:
      return kAtomPrec;
  }
}

void AppendEscaped(char c, std::string_view specials, std::string& out) {
  if (specials.find(c) != std::string_view::npos) out += '\\';
  out += c;
}

void AppendRanges(const CharSet& set, std::string& out) {
  int i = 0;
  while (i < kAlphabetSize) {
    if (!set.Contains(SymbolChar(i))) {
      ++i;
      continue;
    }
    int j = i;
    while (j + 1 < kAlphabetSize && set.Contains(SymbolChar(j + 1))) ++j;
    AppendEscaped(SymbolChar(i), kSpecialInsideClass, out);
    if (j >= i + 2) {
      out += '-';
      AppendEscaped(SymbolChar(j), kSpecialInsideClass, out);
    } else if (j == i + 1) {
      AppendEscaped(SymbolChar(j), kSpecialInsideClass, out);
    }
    i = j + 1;
  }
}

void PrintCharClass(const CharSet& set, std::string& out) {
  if (set.full()) {
    out += '.';
    return;
  }
  if (set.size() == 1) {
    AppendEscaped(set.First(), kSpecialOutsideClass, out);
    return;
  }
  out += '[';
  if (set.size() > static_cast<size_t>(kAlphabetSize) / 2) {
    out += '^';
    AppendRanges(set.Complement(), out);
  } else {
    AppendRanges(set, out);
  }
  out += ']';
}

void Print(const Regex& r, std::string& out);

void PrintAt(const Regex& r, int min_prec, std::string& out) {
  if (PrecedenceOf(r) < min_prec) {
    out += '(';
    Print(r, out);
    out += ')';
  } else {
    Print(r, out);
  }
}

void Print(const Regex& r, std::string& out) {
  switch (r.kind()) {
    case Regex::Kind::kEmpty:
      out += kEmptySetToken;
      return;
    case Regex::Kind::kEpsilon:
      out += "()";
      return;
    case Regex::Kind::kCharClass:
      PrintCharClass(r.chars(), out);
      return;
    case Regex::Kind::kUnion:
      PrintAt(r.left(), kUnionPrec, out);
      out += '|';
      PrintAt(r.right(), kUnionPrec, out);
      return;
    case Regex::Kind::kConcat:
      PrintAt(r.left(), kConcatPrec, out);
      PrintAt(r.right(), kConcatPrec, out);
      return;
    case Regex::Kind::kStar:
      PrintAt(r.inner(), kAtomPrec, out);
      out += '*';
      return;
  }
}

}  // namespace

std::string PrintRegex(const Regex& regex) {
  std::string out;
  Print(regex, out);
  return out;
}

}  // namespace polsum
