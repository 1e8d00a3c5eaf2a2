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

#include "polsum/policy.h"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "json.hpp"
#include "polsum/automaton.h"
#include "polsum/request_set.h"
#include "polsum/status.h"
#include "polsum/wildcard.h"

namespace polsum {
namespace {

using Json = nlohmann::ordered_json;

constexpr ConditionOperator kAllOperators[] = {
    ConditionOperator::kStringEquals,
    ConditionOperator::kStringNotEquals,
    ConditionOperator::kStringLike,
    ConditionOperator::kStringNotLike,
};

absl::Status Schema(std::string message) {
  return MakeError(ErrorKind::kSchema, std::move(message));
}

// Converts a glob/literal construction failure (always an alphabet problem)
// into the SchemaError the policy parser reports.
absl::StatusOr<WildcardPattern> MakePattern(const std::string& text,
                                            bool literal,
                                            std::string_view where) {
  absl::StatusOr<WildcardPattern> p = literal
                                          ? WildcardPattern::FromLiteral(text)
                                          : WildcardPattern::FromGlob(text);
  if (!p.ok()) {
    return Schema(std::string(where) + ": " + std::string(p.status().message()));
  }
  return p;
}

absl::StatusOr<std::string> ScalarText(const Json& v, std::string_view where) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean() || v.is_number()) return v.dump();
  return Schema(std::string(where) + " must be a string");
}

// Collects strings from a string, a list of strings, or (for principals) an
// object whose values are strings or lists of strings.
absl::Status CollectStrings(const Json& v, std::string_view where,
                            bool allow_object, std::vector<std::string>& out) {
  if (v.is_string()) {
    out.push_back(v.get<std::string>());
    return absl::OkStatus();
  }
  if (v.is_array()) {
    if (v.empty()) return Schema(std::string(where) + " must not be empty");
    for (const Json& item : v) {
      if (!item.is_string()) {
        return Schema(std::string(where) + " entries must be strings");
      }
      out.push_back(item.get<std::string>());
    }
    return absl::OkStatus();
  }
  if (allow_object && v.is_object()) {
    if (v.empty()) return Schema(std::string(where) + " must not be empty");
    for (const auto& [unused_key, value] : v.items()) {
      POLSUM_RETURN_IF_ERROR(CollectStrings(value, where, false, out));
    }
    return absl::OkStatus();
  }
  return Schema(std::string(where) + " must be a string or list of strings");
}

absl::StatusOr<PatternClause> ParseClause(const Json& stmt,
                                          const std::string& name,
                                          bool allow_object) {
  const std::string not_name = "Not" + name;
  const bool has_pos = stmt.contains(name);
  const bool has_neg = stmt.contains(not_name);
  if (has_pos && has_neg) {
    return Schema("statement has both " + name + " and " + not_name);
  }
  if (!has_pos && !has_neg) {
    return Schema("statement lacks " + name + " or " + not_name);
  }
  const std::string& field = has_pos ? name : not_name;
  std::vector<std::string> texts;
  POLSUM_RETURN_IF_ERROR(
      CollectStrings(stmt.at(field), field, allow_object, texts));
  PatternClause clause;
  clause.negated = has_neg;
  for (const std::string& t : texts) {
    POLSUM_ASSIGN_OR_RETURN(WildcardPattern p, MakePattern(t, false, field));
    clause.patterns.push_back(std::move(p));
  }
  return clause;
}

std::optional<ConditionOperator> OperatorFromName(std::string_view name) {
  for (ConditionOperator op : kAllOperators) {
    if (ConditionOperatorName(op) == name) return op;
  }
  return std::nullopt;
}

bool IsLikeOperator(ConditionOperator op) {
  return op == ConditionOperator::kStringLike ||
         op == ConditionOperator::kStringNotLike;
}

absl::StatusOr<std::vector<Condition>> ParseConditions(const Json& block) {
  if (!block.is_object()) return Schema("Condition must be an object");
  std::vector<Condition> out;
  for (const auto& [op_name, keys] : block.items()) {
    std::optional<ConditionOperator> op = OperatorFromName(op_name);
    if (!op.has_value()) {
      return Schema("unsupported condition operator '" + op_name + "'");
    }
    if (!keys.is_object() || keys.empty()) {
      return Schema("condition operator '" + op_name +
                    "' must map keys to values");
    }
    for (const auto& [key, values] : keys.items()) {
      if (key.empty()) return Schema("empty condition key");
      Condition cond;
      cond.op = *op;
      cond.key = key;
      std::vector<std::string> texts;
      if (values.is_array()) {
        if (values.empty()) {
          return Schema("condition '" + key + "' has no values");
        }
        for (const Json& v : values) {
          POLSUM_ASSIGN_OR_RETURN(std::string t, ScalarText(v, key));
          texts.push_back(std::move(t));
        }
      } else {
        POLSUM_ASSIGN_OR_RETURN(std::string t, ScalarText(values, key));
        texts.push_back(std::move(t));
      }
      for (const std::string& t : texts) {
        POLSUM_ASSIGN_OR_RETURN(WildcardPattern p,
                                MakePattern(t, !IsLikeOperator(*op), key));
        cond.values.push_back(std::move(p));
      }
      out.push_back(std::move(cond));
    }
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const Condition& a, const Condition& b) {
                     return std::tie(a.op, a.key) < std::tie(b.op, b.key);
                   });
  return out;
}

absl::StatusOr<Statement> ParseStatement(const Json& stmt) {
  if (!stmt.is_object()) return Schema("statement must be an object");
  Statement out;
  if (!stmt.contains("Effect")) return Schema("statement lacks Effect");
  const Json& effect = stmt.at("Effect");
  if (effect == "Allow") {
    out.effect = Effect::kAllow;
  } else if (effect == "Deny") {
    out.effect = Effect::kDeny;
  } else {
    return Schema("Effect must be \"Allow\" or \"Deny\"");
  }
  POLSUM_ASSIGN_OR_RETURN(out.principal, ParseClause(stmt, "Principal", true));
  POLSUM_ASSIGN_OR_RETURN(out.action, ParseClause(stmt, "Action", false));
  POLSUM_ASSIGN_OR_RETURN(out.resource, ParseClause(stmt, "Resource", false));
  if (stmt.contains("Condition")) {
    POLSUM_ASSIGN_OR_RETURN(out.conditions,
                            ParseConditions(stmt.at("Condition")));
  }
  return out;
}

std::string_view Trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

Json PatternsJson(const std::vector<WildcardPattern>& patterns) {
  Json list = Json::array();
  for (const WildcardPattern& p : patterns) list.push_back(p.ToString());
  return list;
}

}  // namespace

std::string_view ConditionOperatorName(ConditionOperator op) {
  switch (op) {
    case ConditionOperator::kStringEquals:
      return "StringEquals";
    case ConditionOperator::kStringNotEquals:
      return "StringNotEquals";
    case ConditionOperator::kStringLike:
      return "StringLike";
    case ConditionOperator::kStringNotLike:
      return "StringNotLike";
  }
  return "";
}

bool IsNegatedOperator(ConditionOperator op) {
  return op == ConditionOperator::kStringNotEquals ||
         op == ConditionOperator::kStringNotLike;
}

absl::StatusOr<PolicyDocument> ParsePolicy(std::string_view text) {
  std::string_view trimmed = Trim(text);
  std::string source(trimmed);
  if (!trimmed.empty() && trimmed.front() == '"') source = "{" + source + "}";

  Json root = Json::parse(source, nullptr, /*allow_exceptions=*/false);
  if (root.is_discarded()) {
    return MakeError(ErrorKind::kSyntax, "policy is not well-formed JSON");
  }
  if (!root.is_object()) return Schema("policy must be a JSON object");

  PolicyDocument doc;
  doc.version = std::string(kDefaultPolicyVersion);
  if (root.contains("Version")) {
    if (!root.at("Version").is_string()) {
      return Schema("Version must be a string");
    }
    doc.version = root.at("Version").get<std::string>();
  }
  if (!root.contains("Statement")) return Schema("policy lacks Statement");
  const Json& statements = root.at("Statement");
  if (statements.is_object()) {
    POLSUM_ASSIGN_OR_RETURN(Statement s, ParseStatement(statements));
    doc.statements.push_back(std::move(s));
  } else if (statements.is_array()) {
    for (const Json& item : statements) {
      POLSUM_ASSIGN_OR_RETURN(Statement s, ParseStatement(item));
      doc.statements.push_back(std::move(s));
    }
  } else {
    return Schema("Statement must be an object or a list");
  }
  if (doc.statements.empty()) return Schema("policy has no statements");
  return doc;
}

std::string PrintPolicy(const PolicyDocument& doc) {
  Json root = Json::object();
  root["Version"] = doc.version;
  Json statements = Json::array();
  for (const Statement& s : doc.statements) {
    Json stmt = Json::object();
    stmt["Effect"] = s.effect == Effect::kAllow ? "Allow" : "Deny";
    auto put = [&stmt](const std::string& name, const PatternClause& c) {
      stmt[c.negated ? "Not" + name : name] = PatternsJson(c.patterns);
    };
    put("Principal", s.principal);
    put("Action", s.action);
    put("Resource", s.resource);
    if (!s.conditions.empty()) {
      Json block = Json::object();
      for (const Condition& c : s.conditions) {
        block[std::string(ConditionOperatorName(c.op))][c.key] =
            PatternsJson(c.values);
      }
      stmt["Condition"] = std::move(block);
    }
    statements.push_back(std::move(stmt));
  }
  root["Statement"] = std::move(statements);
  return root.dump(2) + "\n";
}

std::string_view PolicyWarningKindName(PolicyWarning::Kind kind) {
  switch (kind) {
    case PolicyWarning::Kind::kDuplicateStatement:
      return "DuplicateStatement";
    case PolicyWarning::Kind::kContradictoryCondition:
      return "ContradictoryCondition";
  }
  return "";
}

std::vector<PolicyWarning> ValidatePolicy(const PolicyDocument& doc) {
  std::vector<PolicyWarning> warnings;
  for (size_t i = 0; i < doc.statements.size(); ++i) {
    for (size_t j = 0; j < i; ++j) {
      if (doc.statements[i] == doc.statements[j]) {
        warnings.push_back({PolicyWarning::Kind::kDuplicateStatement,
                            static_cast<int>(i),
                            "statement " + std::to_string(i) +
                                " duplicates statement " + std::to_string(j)});
        break;
      }
    }
  }
  for (size_t i = 0; i < doc.statements.size(); ++i) {
    std::map<std::string, std::vector<const Condition*>> by_key;
    for (const Condition& c : doc.statements[i].conditions) {
      by_key[c.key].push_back(&c);
    }
    for (const auto& [key, conds] : by_key) {
      if (conds.size() < 2) continue;
      std::optional<Dfa> conjunction;
      bool undecided = false;
      for (const Condition* c : conds) {
        absl::StatusOr<Dfa> d = CompileCondition(*c);
        if (!d.ok()) {
          undecided = true;
          break;
        }
        if (!conjunction.has_value()) {
          conjunction = *std::move(d);
          continue;
        }
        absl::StatusOr<Dfa> both = Intersect(*conjunction, *d);
        if (!both.ok()) {
          undecided = true;
          break;
        }
        conjunction = *std::move(both);
      }
      if (!undecided && IsEmpty(*conjunction)) {
        warnings.push_back({PolicyWarning::Kind::kContradictoryCondition,
                            static_cast<int>(i),
                            "statement " + std::to_string(i) +
                                ": no value of '" + key +
                                "' satisfies all of its conditions"});
      }
    }
  }
  return warnings;
}

}  // namespace polsum
