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

#include "polsum/alphabet.h"

#include <cstdio>
#include <string>
#include <string_view>

#include "polsum/status.h"

namespace polsum {

absl::Status CheckAlphabet(std::string_view s) {
  for (size_t i = 0; i < s.size(); ++i) {
    if (!InAlphabet(s[i])) {
      char buf[8];
      std::snprintf(buf, sizeof(buf), "0x%02X",
                    static_cast<unsigned char>(s[i]));
      return MakeError(ErrorKind::kAlphabet,
                       std::string("character ") + buf + " at offset " +
                           std::to_string(i) +
                           " is outside printable ASCII 32..126");
    }
  }
  return absl::OkStatus();
}

CharSet CharSet::Full() {
  CharSet s;
  s.bits_.set();
  return s;
}

CharSet CharSet::Single(char c) {
  CharSet s;
  s.Insert(c);
  return s;
}

CharSet CharSet::Range(char lo, char hi) {
  CharSet s;
  for (int c = lo; c <= hi; ++c) s.Insert(static_cast<char>(c));
  return s;
}

CharSet CharSet::Of(std::string_view chars) {
  CharSet s;
  for (char c : chars) s.Insert(c);
  return s;
}

char CharSet::First() const { return Nth(0); }

char CharSet::Nth(size_t n) const {
  for (int i = 0; i < kAlphabetSize; ++i) {
    if (bits_.test(i)) {
      if (n == 0) return SymbolChar(i);
      --n;
    }
  }
  return '\0';
}

CharSet CharSet::Complement() const {
  CharSet s;
  s.bits_ = ~bits_;
  return s;
}

CharSet CharSet::operator|(const CharSet& other) const {
  CharSet s;
  s.bits_ = bits_ | other.bits_;
  return s;
}

CharSet CharSet::operator&(const CharSet& other) const {
  CharSet s;
  s.bits_ = bits_ & other.bits_;
  return s;
}

CharSet& CharSet::operator|=(const CharSet& other) {
  bits_ |= other.bits_;
  return *this;
}

bool operator<(const CharSet& a, const CharSet& b) {
  for (int i = 0; i < kAlphabetSize; ++i) {
    if (a.bits_.test(i) != b.bits_.test(i)) return a.bits_.test(i);
  }
  return false;
}

std::string CharSet::DebugString() const {
  if (full()) return "ANY";
  std::string out;
  int i = 0;
  while (i < kAlphabetSize) {
    if (!bits_.test(i)) {
      ++i;
      continue;
    }
    int j = i;
    while (j + 1 < kAlphabetSize && bits_.test(j + 1)) ++j;
    out += SymbolChar(i);
    if (j > i) {
      if (j > i + 1) out += '-';
      out += SymbolChar(j);
    }
    i = j + 1;
  }
  return out;
}

}  // namespace polsum
