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

#include <random>
#include <string>

#include "gtest/gtest.h"
#include "polsum/automaton.h"
#include "testing/generators.h"
#include "testing/helpers.h"
#include "testing/oracles.h"

namespace polsum {
namespace {

using testing::Eq;
using testing::Must;
using testing::Re;

const Regex a = Regex::Char('a');
const Regex b = Regex::Char('b');

TEST(RegexTest, LeafConstructors) {
  EXPECT_EQ(Regex().kind(), Regex::Kind::kEmpty);
  EXPECT_EQ(Regex::Chars(CharSet()).kind(), Regex::Kind::kEmpty);
  EXPECT_EQ(Regex::Literal("").kind(), Regex::Kind::kEpsilon);
  EXPECT_EQ(Regex::Literal("ab"), Regex::Concat(a, b));
  EXPECT_EQ(Regex::Any().chars(), CharSet::Full());
}

TEST(RegexTest, StructuralEqualityAndHash) {
  Regex x = Regex::Union(a, Regex::Star(b));
  Regex y = Regex::Union(Regex::Char('a'), Regex::Star(Regex::Char('b')));
  EXPECT_EQ(x, y);
  EXPECT_EQ(x.hash(), y.hash());
  EXPECT_FALSE(x == Regex::Union(Regex::Star(b), a));
  EXPECT_EQ(x.size(), 4u);
}

TEST(RegexTest, SimplificationRules) {
  const Regex eps = Regex::Epsilon();
  const Regex empty = Regex::Empty();
  EXPECT_EQ(Regex::SimplifiedConcat(a, eps), a);
  EXPECT_EQ(Regex::SimplifiedConcat(eps, a), a);
  EXPECT_EQ(Regex::SimplifiedConcat(empty, a), empty);
  EXPECT_EQ(Regex::SimplifiedConcat(a, empty), empty);
  EXPECT_EQ(Regex::SimplifiedUnion(a, empty), a);
  EXPECT_EQ(Regex::SimplifiedUnion(empty, a), a);
  Regex ab = Regex::Concat(a, b);
  EXPECT_EQ(Regex::SimplifiedUnion(ab, ab), ab);
  EXPECT_EQ(Regex::SimplifiedStar(empty), eps);
  EXPECT_EQ(Regex::SimplifiedStar(eps), eps);
  EXPECT_EQ(Regex::SimplifiedStar(Regex::Star(a)), Regex::Star(a));
  EXPECT_EQ(Regex::SimplifiedUnion(a, b), Regex::Chars(CharSet::Of("ab")));
  EXPECT_EQ(Regex::SimplifiedUnion(eps, Regex::Star(ab)), Regex::Star(ab));
}

TEST(RegexTest, PrinterExamples) {
  EXPECT_EQ(PrintRegex(Regex::Union(a, b)), "a|b");
  EXPECT_EQ(PrintRegex(Regex::Star(Regex::Union(a, b))), "(a|b)*");
  EXPECT_EQ(PrintRegex(Regex::Empty()), "\xE2\x88\x85");
  EXPECT_EQ(PrintRegex(Regex::Epsilon()), "()");
  EXPECT_EQ(PrintRegex(Regex::Concat(a, Regex::Union(a, b))), "a(a|b)");
  EXPECT_EQ(PrintRegex(Regex::Star(Regex::Concat(a, b))), "(ab)*");
  EXPECT_EQ(PrintRegex(Regex::Star(Regex::Star(a))), "(a*)*");
  EXPECT_EQ(PrintRegex(Regex::Any()), ".");
  EXPECT_EQ(PrintRegex(Regex::Literal("a.b")), "a\\.b");
  EXPECT_EQ(PrintRegex(Regex::Chars(CharSet::Range('a', 'e'))), "[a-e]");
  EXPECT_EQ(PrintRegex(Regex::Chars(CharSet::Of(".").Complement())), "[^.]");
  EXPECT_EQ(PrintRegex(Regex::Chars(CharSet::Of("]-"))), "[\\-\\]]");
}

TEST(RegexTest, IsEmptyLanguage) {
  EXPECT_TRUE(IsEmptyLanguage(Regex::Empty()));
  EXPECT_FALSE(IsEmptyLanguage(Regex::Epsilon()));
  EXPECT_TRUE(IsEmptyLanguage(Regex::Concat(a, Regex::Empty())));
  EXPECT_FALSE(IsEmptyLanguage(Regex::Union(Regex::Empty(), a)));
  EXPECT_FALSE(IsEmptyLanguage(Regex::Star(Regex::Empty())));
}

// Printed output re-parses to the same language.
TEST(RegexPropertyTest, PrintParseRoundTrip) {
  testing::Rng rng(11);
  for (int i = 0; i < 300; ++i) {
    std::string chars = testing::RandomSubAlphabet(rng, 3) + "]\\.";
    Regex r = testing::RandomRegex(rng, chars, 5);
    std::string printed = PrintRegex(r);
    Regex back = Re(printed);
    EXPECT_TRUE(Eq(Must(DfaFromRegex(r)), Must(DfaFromRegex(back))))
        << printed;
  }
}

// The printed text means the same thing to an independent regex engine.
TEST(RegexPropertyTest, PrintedTextAgreesWithStdRegex) {
  testing::Rng rng(12);
  for (int i = 0; i < 150; ++i) {
    std::string chars = testing::RandomSubAlphabet(rng, 2);
    Regex r = testing::RandomRegex(rng, chars, 4);
    std::string printed = PrintRegex(r);
    Dfa d = Must(DfaFromRegex(r));
    std::string probe = chars + testing::OtherSymbol(chars);
    for (const std::string& s : testing::AllStrings(probe, 4)) {
      ASSERT_EQ(testing::In(d, s), testing::StdRegexMatch(printed, s))
          << printed << " on '" << s << "'";
    }
  }
}

}  // namespace
}  // namespace polsum
