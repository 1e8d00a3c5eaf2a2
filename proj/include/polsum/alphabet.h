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

#ifndef POLSUM_ALPHABET_H_
#define POLSUM_ALPHABET_H_

#include <bitset>
#include <cstddef>
#include <string>
#include <string_view>

#include "absl/status/status.h"

namespace polsum {

// Every string the engine reasons about is over printable ASCII 32..126.
inline constexpr char kFirstChar = ' ';
inline constexpr char kLastChar = '~';
inline constexpr int kAlphabetSize = kLastChar - kFirstChar + 1;  // 95

inline constexpr bool InAlphabet(char c) {
  return c >= kFirstChar && c <= kLastChar;
}

inline constexpr int SymbolIndex(char c) { return c - kFirstChar; }
inline constexpr char SymbolChar(int index) {
  return static_cast<char>(kFirstChar + index);
}

// Returns an AlphabetError naming the first offending character, if any.
absl::Status CheckAlphabet(std::string_view s);

// A subset of the alphabet.
class CharSet {
 public:
  CharSet() = default;

  static CharSet Full();
  static CharSet Single(char c);
  // Inclusive range; both ends must be in the alphabet.
  static CharSet Range(char lo, char hi);
  static CharSet Of(std::string_view chars);

  bool Contains(char c) const {
    return InAlphabet(c) && bits_.test(SymbolIndex(c));
  }
  void Insert(char c) { bits_.set(SymbolIndex(c)); }
  void Erase(char c) { bits_.reset(SymbolIndex(c)); }

  size_t size() const { return bits_.count(); }
  bool empty() const { return bits_.none(); }
  bool full() const { return bits_.all(); }

  // Smallest member. Requires !empty().
  char First() const;
  // The `n`-th smallest member (0-based). Requires n < size().
  char Nth(size_t n) const;

  CharSet Complement() const;
  CharSet operator|(const CharSet& other) const;
  CharSet operator&(const CharSet& other) const;
  CharSet& operator|=(const CharSet& other);

  friend bool operator==(const CharSet& a, const CharSet& b) {
    return a.bits_ == b.bits_;
  }
  // Lexicographic by member set; gives a deterministic ordering for maps.
  friend bool operator<(const CharSet& a, const CharSet& b);

  template <typename F>
  void ForEach(F&& f) const {
    for (int i = 0; i < kAlphabetSize; ++i) {
      if (bits_.test(i)) f(SymbolChar(i));
    }
  }

  size_t Hash() const { return std::hash<std::bitset<kAlphabetSize>>()(bits_); }

  // Human-readable listing with ranges, e.g. "a-z0-9_". Used for dot output.
  std::string DebugString() const;

 private:
  std::bitset<kAlphabetSize> bits_;
};

}  // namespace polsum

#endif  // POLSUM_ALPHABET_H_
