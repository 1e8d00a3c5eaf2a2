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

#include "polsum/regex_parser.h"

#include <string>

#include "gtest/gtest.h"
#include "polsum/automaton.h"
#include "polsum/regex.h"
#include "polsum/status.h"
#include "testing/generators.h"
#include "testing/helpers.h"
#include "testing/oracles.h"

namespace polsum {
namespace {

using testing::Eq;
using testing::In;
using testing::Must;
using testing::Re;
using testing::ReDfa;

bool Fails(std::string_view text, ErrorKind kind) {
  return IsErrorKind(ParseRegex(text).status(), kind);
}

TEST(RegexParserTest, MotivatingSummaryParses) {
  Regex r = Re("(mp3s/A1/.*\\.mp3)|(lyrics/A1/.*\\.txt)");
  EXPECT_EQ(r.kind(), Regex::Kind::kUnion);
  Dfa d = Must(DfaFromRegex(r));
  EXPECT_TRUE(In(d, "mp3s/A1/x.mp3"));
  EXPECT_TRUE(In(d, "lyrics/A1/a/b.txt"));
  EXPECT_FALSE(In(d, "mp3s/A1/x.txt"));
  EXPECT_FALSE(In(d, "mp3s/A2/x.mp3"));
}

TEST(RegexParserTest, PlusDesugarsToConcatStar) {
  Regex a = Regex::Char('a');
  EXPECT_EQ(Re("a+"), Regex::Concat(a, Regex::Star(a)));
}

TEST(RegexParserTest, QuantifiersHaveExpectedLanguages) {
  EXPECT_TRUE(Eq(ReDfa("a?"), ReDfa("a|()")));
  EXPECT_TRUE(Eq(ReDfa("a{3}"), ReDfa("aaa")));
  EXPECT_TRUE(Eq(ReDfa("a{1,3}"), ReDfa("a|aa|aaa")));
  EXPECT_TRUE(Eq(ReDfa("a{2,}"), ReDfa("aaa*")));
  EXPECT_TRUE(Eq(ReDfa("a{0}"), ReDfa("()")));
  EXPECT_TRUE(Eq(ReDfa("(ab){2}"), ReDfa("abab")));
}

TEST(RegexParserTest, ClassesAndEscapes) {
  EXPECT_TRUE(Eq(ReDfa("[a-c]"), ReDfa("a|b|c")));
  EXPECT_TRUE(Eq(ReDfa("[^a]"), Must(DfaFromRegex(Regex::Chars(
                                    CharSet::Of("a").Complement())))));
  EXPECT_TRUE(Eq(ReDfa("\\d"), ReDfa("[0-9]")));
  EXPECT_TRUE(Eq(ReDfa("\\w"), ReDfa("[a-zA-Z0-9_]")));
  EXPECT_TRUE(Eq(ReDfa("\\s"), ReDfa(" ")));
  EXPECT_TRUE(Eq(ReDfa("\\x41"), ReDfa("A")));
  EXPECT_TRUE(Eq(ReDfa("[\\]x]"), ReDfa("\\]|x")));
  EXPECT_TRUE(Eq(ReDfa("[a-]"), ReDfa("a|-")));
  EXPECT_TRUE(In(ReDfa("\\.\\*\\+\\?\\(\\)\\[\\]\\|\\{\\}\\\\"),
                 ".*+?()[]|{}\\"));
}

TEST(RegexParserTest, AnchorsAndGroups) {
  EXPECT_TRUE(Eq(ReDfa("^ab$"), ReDfa("ab")));
  EXPECT_TRUE(Eq(ReDfa("(?:ab)*"), ReDfa("(ab)*")));
  EXPECT_TRUE(Fails("", ErrorKind::kSyntax));
  EXPECT_TRUE(Eq(ReDfa("a|"), ReDfa("a?")));
  EXPECT_TRUE(Fails("a^b", ErrorKind::kUnsupportedConstruct));
}

TEST(RegexParserTest, EmptySetSentinel) {
  EXPECT_EQ(Re("\xE2\x88\x85").kind(), Regex::Kind::kEmpty);
}

TEST(RegexParserTest, UnsupportedConstructs) {
  EXPECT_TRUE(Fails("a(?=b)", ErrorKind::kUnsupportedConstruct));
  EXPECT_TRUE(Fails("a(?!b)", ErrorKind::kUnsupportedConstruct));
  EXPECT_TRUE(Fails("(?<=a)b", ErrorKind::kUnsupportedConstruct));
  EXPECT_TRUE(Fails("(?<name>a)", ErrorKind::kUnsupportedConstruct));
  EXPECT_TRUE(Fails("(a)\\1", ErrorKind::kUnsupportedConstruct));
  EXPECT_TRUE(Fails("a*?", ErrorKind::kUnsupportedConstruct));
  EXPECT_TRUE(Fails("a++", ErrorKind::kUnsupportedConstruct));
  EXPECT_TRUE(Fails("\\bword", ErrorKind::kUnsupportedConstruct));
  EXPECT_TRUE(Fails("a{65}", ErrorKind::kUnsupportedConstruct));
  EXPECT_TRUE(Fails("[[:alpha:]]", ErrorKind::kUnsupportedConstruct));
}

TEST(RegexParserTest, SyntaxErrors) {
  EXPECT_TRUE(Fails("(ab", ErrorKind::kSyntax));
  EXPECT_TRUE(Fails("ab)", ErrorKind::kSyntax));
  EXPECT_TRUE(Fails("[ab", ErrorKind::kSyntax));
  EXPECT_TRUE(Fails("*a", ErrorKind::kSyntax));
  EXPECT_TRUE(Fails("a{3,1}", ErrorKind::kSyntax));
  EXPECT_TRUE(Fails("[z-a]", ErrorKind::kSyntax));
  EXPECT_TRUE(Fails("a\\", ErrorKind::kSyntax));
}

TEST(RegexParserTest, AlphabetErrors) {
  EXPECT_TRUE(Fails("a\\n", ErrorKind::kAlphabet));
  EXPECT_TRUE(Fails("a\\t", ErrorKind::kAlphabet));
  EXPECT_TRUE(Fails("caf\xc3\xa9", ErrorKind::kAlphabet));
}

// L(R+) = L(R)L(R)* and L(R?) = L(R) ∪ {ε} for random R.
TEST(RegexParserPropertyTest, DesugaringSoundness) {
  testing::Rng rng(21);
  for (int i = 0; i < 200; ++i) {
    std::string chars = testing::RandomSubAlphabet(rng, 2);
    Regex r = testing::RandomRegex(rng, chars, 3);
    std::string p = "(" + PrintRegex(r) + ")";
    Dfa d = Must(DfaFromRegex(r));
    Dfa plus = ReDfa(p + "+");
    Dfa opt = ReDfa(p + "?");
    EXPECT_TRUE(Eq(plus, Must(DfaFromRegex(Regex::Concat(r, Regex::Star(r))))))
        << p;
    EXPECT_TRUE(Eq(opt, Must(Union(d, Dfa::Literal(""))))) << p;
  }
}

}  // namespace
}  // namespace polsum
