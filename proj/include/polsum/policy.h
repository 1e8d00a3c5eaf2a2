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

#ifndef POLSUM_POLICY_H_
#define POLSUM_POLICY_H_

#include <string>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"
#include "polsum/wildcard.h"

namespace polsum {

enum class Effect { kAllow, kDeny };

// One of Principal/Action/Resource or its Not- form.
struct PatternClause {
  bool negated = false;
  std::vector<WildcardPattern> patterns;  // non-empty

  friend bool operator==(const PatternClause&, const PatternClause&) = default;
};

enum class ConditionOperator {
  kStringEquals,
  kStringNotEquals,
  kStringLike,
  kStringNotLike,
};

std::string_view ConditionOperatorName(ConditionOperator op);
bool IsNegatedOperator(ConditionOperator op);

// Values are disjoined. StringEquals/StringNotEquals values are literal
// patterns; StringLike/StringNotLike values honor `*` and `?`.
struct Condition {
  ConditionOperator op = ConditionOperator::kStringEquals;
  std::string key;                     // non-empty
  std::vector<WildcardPattern> values;  // non-empty

  friend bool operator==(const Condition&, const Condition&) = default;
};

struct Statement {
  Effect effect = Effect::kAllow;
  PatternClause principal;
  PatternClause action;
  PatternClause resource;
  // Conjoined.
  std::vector<Condition> conditions;

  friend bool operator==(const Statement&, const Statement&) = default;
};

struct PolicyDocument {
  std::string version;
  std::vector<Statement> statements;  // non-empty, in source order

  friend bool operator==(const PolicyDocument&,
                         const PolicyDocument&) = default;
};

inline constexpr std::string_view kDefaultPolicyVersion = "2012-10-17";

// Parses AWS-style policy JSON. Accepts a full document object or a bare
// `"Statement": [...]` member as it appears in listings. `Statement` may be an
// object or a list; pattern fields may be a string or a list of strings; a
// Principal object such as {"AWS": [...]} contributes all of its strings.
// Unanalyzed fields such as Sid are ignored.
//
// Errors: SyntaxError for malformed JSON, SchemaError for structural
// violations (missing Effect, both Resource and NotResource, unknown condition
// operator, character outside the alphabet, empty lists, ...).
absl::StatusOr<PolicyDocument> ParsePolicy(std::string_view text);

// Normalized JSON rendering. ParsePolicy(PrintPolicy(d)) == d.
std::string PrintPolicy(const PolicyDocument& doc);

struct PolicyWarning {
  enum class Kind { kDuplicateStatement, kContradictoryCondition };
  Kind kind;
  int statement_index;
  std::string message;
};

std::string_view PolicyWarningKindName(PolicyWarning::Kind kind);

// Non-fatal findings:
//   DuplicateStatement     a statement identical to an earlier one.
//   ContradictoryCondition the conditions on one key within a statement admit
//                          no value, so the statement can never apply.
std::vector<PolicyWarning> ValidatePolicy(const PolicyDocument& doc);

}  // namespace polsum

#endif  // POLSUM_POLICY_H_
