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

#include <string>

#include "gtest/gtest.h"
#include "polsum/status.h"

namespace polsum {
namespace {

TEST(AlphabetTest, Bounds) {
  EXPECT_EQ(kAlphabetSize, 95);
  EXPECT_TRUE(InAlphabet(' '));
  EXPECT_TRUE(InAlphabet('~'));
  EXPECT_FALSE(InAlphabet('\n'));
  EXPECT_FALSE(InAlphabet('\x7f'));
  EXPECT_EQ(SymbolChar(SymbolIndex('q')), 'q');
}

TEST(AlphabetTest, CheckAlphabetNamesOffender) {
  EXPECT_TRUE(CheckAlphabet("plain text ~!").ok());
  absl::Status s = CheckAlphabet("tab\there");
  EXPECT_TRUE(IsErrorKind(s, ErrorKind::kAlphabet));
  EXPECT_TRUE(IsErrorKind(CheckAlphabet("caf\xc3\xa9"), ErrorKind::kAlphabet));
}

TEST(CharSetTest, BasicOperations) {
  CharSet digits = CharSet::Range('0', '9');
  EXPECT_EQ(digits.size(), 10u);
  EXPECT_EQ(digits.First(), '0');
  EXPECT_EQ(digits.Nth(9), '9');
  EXPECT_TRUE(digits.Contains('5'));
  EXPECT_FALSE(digits.Contains('a'));
  EXPECT_FALSE(digits.Contains('\n'));

  CharSet rest = digits.Complement();
  EXPECT_EQ(rest.size(), 85u);
  EXPECT_TRUE((digits | rest).full());
  EXPECT_TRUE((digits & rest).empty());

  CharSet abc = CharSet::Of("cab");
  std::string members;
  abc.ForEach([&](char c) { members.push_back(c); });
  EXPECT_EQ(members, "abc");
  abc.Erase('b');
  EXPECT_EQ(abc, CharSet::Of("ac"));
}

TEST(CharSetTest, NthEnumeratesInOrder) {
  CharSet s = CharSet::Of("z!M5");
  std::string listed;
  for (size_t i = 0; i < s.size(); ++i) listed.push_back(s.Nth(i));
  EXPECT_EQ(listed, "!5Mz");
}

TEST(CharSetTest, OrderingIsStrictWeak) {
  CharSet a = CharSet::Of("a");
  CharSet b = CharSet::Of("b");
  EXPECT_NE(a < b, b < a);
  EXPECT_FALSE(a < a);
}

}  // namespace
}  // namespace polsum
