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

#include "polsum/request_set.h"

#include <map>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "polsum/automaton.h"
#include "polsum/status.h"
#include "testing/generators.h"
#include "testing/helpers.h"
#include "testing/oracles.h"

namespace polsum {
namespace {

using testing::Eq;
using testing::LoadPolicy;
using testing::Must;
using testing::ReDfa;

AccessRequest Req(std::string principal, std::string action,
                  std::string resource,
                  std::map<std::string, std::string> context = {}) {
  return {std::move(principal), std::move(action), std::move(resource),
          std::move(context)};
}

bool Has(const RequestSet& set, const AccessRequest& r) {
  return Must(Contains(set, r));
}

// Every request whose fixed fields and k0/k1 values are strings over
// `chars` of length <= max_len.
std::vector<AccessRequest> BoundedUniverse(const std::string& chars,
                                           int max_len) {
  std::vector<std::string> values = testing::AllStrings(chars, max_len);
  std::vector<AccessRequest> out;
  for (const auto& p : values)
    for (const auto& a : values)
      for (const auto& r : values)
        for (const auto& k0 : values)
          for (const auto& k1 : values)
            out.push_back(Req(p, a, r, {{"k0", k0}, {"k1", k1}}));
  return out;
}

TEST(CompilePolicyTest, AllowThenDenyEverythingIsEmpty) {
  RequestSet s = Must(CompilePolicy(LoadPolicy("deny_all.json")));
  EXPECT_TRUE(IsEmptySet(s));
  EXPECT_TRUE(Eq(Must(Project(s, kResourceDim)), Dfa::EmptyLanguage()));
}

TEST(CompilePolicyTest, NotResourceDeny) {
  RequestSet s = Must(CompilePolicy(LoadPolicy("music_bucket.json")));
  EXPECT_TRUE(Eq(Must(Project(s, kResourceDim)),
                 ReDfa("(mp3s/A1/.*\\.mp3)|(lyrics/A1/.*\\.txt)")));
  EXPECT_TRUE(Eq(Must(Project(s, kActionDim)), Dfa::Literal("s3:GetObject")));
  EXPECT_TRUE(Eq(Must(Project(s, kPrincipalDim)), Dfa::Universal()));
  EXPECT_TRUE(Has(s, Req("alice", "s3:GetObject", "mp3s/A1/x.mp3")));
  EXPECT_FALSE(Has(s, Req("alice", "s3:GetObject", "mp3s/A2/x.mp3")));
  EXPECT_FALSE(Has(s, Req("alice", "s3:PutObject", "mp3s/A1/x.mp3")));
  EXPECT_TRUE(absl::IsNotFound(Project(s, "nope").status()));
}

TEST(CompilePolicyTest, ConditionKeysBecomeDimensions) {
  RequestSet s = Must(CompilePolicy(LoadPolicy("tagged_access.json")));
  std::vector<std::string> expected = {
      "principal",        "action",   "resource", "aws:PrincipalTag/team",
      "aws:SourceVpc",    "s3:prefix"};
  EXPECT_EQ(s.schema().dims(), expected);
  AccessRequest ok = Req("p", "s3:GetObject", "reports/q1",
                         {{"aws:PrincipalTag/team", "audit"},
                          {"s3:prefix", "reports/2024/x"},
                          {"aws:SourceVpc", "vpc-1a2b3c"}});
  EXPECT_TRUE(Has(s, ok));
  AccessRequest wrong_vpc = ok;
  wrong_vpc.context["aws:SourceVpc"] = "vpc-other";
  EXPECT_FALSE(Has(s, wrong_vpc));
  AccessRequest wrong_team = ok;
  wrong_team.context["aws:PrincipalTag/team"] = "dev";
  EXPECT_FALSE(Has(s, wrong_team));
  // Missing keys read as the empty string.
  AccessRequest missing = ok;
  missing.context.erase("aws:PrincipalTag/team");
  EXPECT_FALSE(Has(s, missing));
}

TEST(CompileConditionTest, NegatedOperatorsComplement) {
  Condition c{ConditionOperator::kStringNotEquals, "k",
              {Must(WildcardPattern::FromLiteral("x"))}};
  Dfa d = Must(CompileCondition(c));
  EXPECT_FALSE(testing::In(d, "x"));
  EXPECT_TRUE(testing::In(d, "y"));
  EXPECT_TRUE(testing::In(d, ""));
}

TEST(DimensionSchemaTest, CollisionIsSchemaError) {
  EXPECT_TRUE(IsErrorKind(DimensionSchema::WithConditionKeys({"resource"})
                              .status(),
                          ErrorKind::kSchema));
  DimensionSchema s = Must(DimensionSchema::WithConditionKeys({"b", "a"}));
  EXPECT_EQ(*s.IndexOf("a"), 3u);
  EXPECT_FALSE(s.IndexOf("c").has_value());
}

// A two-dimension example checked against a hand enumeration over {a, b}
// strings up to length 2.
TEST(SetAlgebraTest, TwoDimensionBruteForce) {
  DimensionSchema schema = Must(DimensionSchema::WithConditionKeys({}));
  Dfa any = Dfa::Universal();
  auto cube = [&](const char* p, const char* r) {
    return RequestCube{{ReDfa(p), any, ReDfa(r)}};
  };
  RequestSet x(schema, {cube("a*", "b|ab"), cube("b", "a*")});
  RequestSet y(schema, {cube("a|b", "(a|b)*b")});
  RequestSet u = Must(SetUnion(x, y));
  RequestSet n = Must(SetIntersect(x, y));
  RequestSet d = Must(SetDifference(x, y));
  auto in_x = [](const std::string& p, const std::string& r) {
    bool p_as = p.find('b') == std::string::npos;
    bool r_as = r.find('b') == std::string::npos;
    return (p_as && (r == "b" || r == "ab")) || (p == "b" && r_as);
  };
  auto in_y = [](const std::string& p, const std::string& r) {
    return (p == "a" || p == "b") && !r.empty() && r.back() == 'b';
  };
  int checked = 0;
  for (const std::string& p : testing::AllStrings("ab", 2)) {
    for (const std::string& r : testing::AllStrings("ab", 2)) {
      AccessRequest req = Req(p, "x", r);
      bool ix = in_x(p, r), iy = in_y(p, r);
      ASSERT_EQ(Has(x, req), ix) << p << " " << r;
      ASSERT_EQ(Has(u, req), ix || iy);
      ASSERT_EQ(Has(n, req), ix && iy);
      ASSERT_EQ(Has(d, req), ix && !iy);
      ++checked;
    }
  }
  EXPECT_EQ(checked, 49);
}

TEST(SetAlgebraTest, DifferenceBlowupIsReported) {
  DimensionSchema schema;
  std::vector<RequestCube> cubes;
  for (const char* v : {"a", "b", "c"}) {
    cubes.push_back({{Dfa::Literal(v), Dfa::Literal(v), Dfa::Literal(v)}});
  }
  RequestSet x = RequestSet::Universe(schema);
  RequestSet y(schema, cubes);
  SetLimits tight;
  tight.max_cubes = 2;
  EXPECT_TRUE(IsErrorKind(SetDifference(x, y, tight).status(),
                          ErrorKind::kCubeBlowup));
  EXPECT_TRUE(SetDifference(x, y).ok());
}

TEST(SetAlgebraTest, NormalizationDropsEmptyAndDuplicateCubes) {
  DimensionSchema schema;
  Dfa any = Dfa::Universal();
  RequestCube c{{any, any, Dfa::Literal("r")}};
  RequestCube empty{{any, Dfa::EmptyLanguage(), any}};
  RequestSet s(schema, {c, empty, c});
  EXPECT_EQ(s.cubes().size(), 1u);
  EXPECT_TRUE(IsEmptySet(RequestSet(schema, {empty})));
  EXPECT_TRUE(IsEmptySet(RequestSet::Empty(schema)));
  EXPECT_FALSE(IsEmptySet(RequestSet::Universe(schema)));
}

TEST(RequestTupleTest, RoundTripAndMissingKeys) {
  DimensionSchema schema = Must(DimensionSchema::WithConditionKeys({"k"}));
  AccessRequest r = Req("p", "a", "r");
  std::vector<std::string> tuple = RequestTuple(r, schema);
  EXPECT_EQ(tuple, (std::vector<std::string>{"p", "a", "r", ""}));
  r.context["k"] = "v";
  EXPECT_EQ(RequestFromTuple(RequestTuple(r, schema), schema), r);
}

TEST(ContainsTest, AlphabetError) {
  RequestSet s = RequestSet::Universe(DimensionSchema());
  EXPECT_TRUE(IsErrorKind(Contains(s, Req("p", "a", "r\t")).status(),
                          ErrorKind::kAlphabet));
}

TEST(DecideRequestTest, Examples) {
  PolicyDocument right = LoadPolicy("music_bucket.json");
  EXPECT_EQ(Must(DecideRequest(right, Req("u", "s3:GetObject",
                                          "lyrics/A1/song.txt"))),
            Decision::kAllow);
  EXPECT_EQ(Must(DecideRequest(right, Req("u", "s3:GetObject",
                                          "lyrics/A1/song.mp3"))),
            Decision::kDeny);
  PolicyDocument left = LoadPolicy("deny_all.json");
  EXPECT_EQ(Must(DecideRequest(left, Req("u", "s3:GetObject", "x"))),
            Decision::kDeny);
  EXPECT_EQ(DecisionName(Decision::kAllow), "Allow");
}

// The compiled set contains exactly the requests a statement-by-statement
// evaluator allows, over a bounded universe.
TEST(CompilePolicyPropertyTest, MatchesReferenceEvaluator) {
  testing::Rng rng(71);
  const std::vector<AccessRequest> universe = BoundedUniverse("abc", 1);
  for (int i = 0; i < 120; ++i) {
    PolicyDocument doc = testing::RandomPolicy(rng, {});
    RequestSet s = Must(CompilePolicy(doc));
    for (const AccessRequest& r : universe) {
      ASSERT_EQ(Has(s, r), testing::ReferenceAllows(doc, r))
          << PrintPolicy(doc) << "\nrequest " << r.principal << "|"
          << r.action << "|" << r.resource << "|" << r.context.at("k0") << "|"
          << r.context.at("k1");
    }
  }
}

TEST(SetAlgebraPropertyTest, LawsHoldPointwise) {
  testing::Rng rng(72);
  const std::vector<AccessRequest> universe = BoundedUniverse("abc", 1);
  for (int i = 0; i < 60; ++i) {
    RequestSet a = Must(CompilePolicy(testing::RandomPolicy(rng, {})));
    RequestSet b = Must(CompilePolicy(testing::RandomPolicy(rng, {})));
    RequestSet u = Must(SetUnion(a, b));
    RequestSet n = Must(SetIntersect(a, b));
    RequestSet d = Must(SetDifference(a, b));
    // (A \ B) ∩ B = ∅ and (A ∩ B) ∪ (A \ B) = A.
    EXPECT_TRUE(IsEmptySet(Must(SetIntersect(d, b))));
    RequestSet rebuilt = Must(SetUnion(n, d));
    EXPECT_TRUE(IsEmptySet(Must(SetDifference(a, rebuilt))));
    EXPECT_TRUE(IsEmptySet(Must(SetDifference(rebuilt, a))));
    for (const AccessRequest& r : universe) {
      bool ia = Has(a, r), ib = Has(b, r);
      ASSERT_EQ(Has(u, r), ia || ib);
      ASSERT_EQ(Has(n, r), ia && ib);
      ASSERT_EQ(Has(d, r), ia && !ib);
    }
  }
}

TEST(ProjectPropertyTest, ProjectionContainsMemberValues) {
  testing::Rng rng(73);
  const std::vector<AccessRequest> universe = BoundedUniverse("ab", 1);
  for (int i = 0; i < 60; ++i) {
    RequestSet s = Must(CompilePolicy(testing::RandomPolicy(rng, {})));
    Dfa resources = Must(Project(s, kResourceDim));
    EXPECT_EQ(IsEmpty(resources), IsEmptySet(s));
    for (const AccessRequest& r : universe) {
      if (Has(s, r)) ASSERT_TRUE(testing::In(resources, r.resource));
    }
  }
}

}  // namespace
}  // namespace polsum
