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

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "polsum/automaton.h"
#include "polsum/policy.h"
#include "polsum/status.h"

namespace polsum {
namespace {

absl::Status CubeBlowup(size_t limit) {
  return MakeError(ErrorKind::kCubeBlowup,
                   "request set exceeds the cap of " + std::to_string(limit) +
                       " cubes");
}

size_t CubeHash(const RequestCube& cube) {
  size_t h = cube.components.size();
  for (const Dfa& d : cube.components) {
    h ^= d.Hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

// Drops empty cubes and exact duplicates, keeping first occurrences.
std::vector<RequestCube> Normalize(std::vector<RequestCube> cubes) {
  std::vector<RequestCube> out;
  std::unordered_multimap<size_t, size_t> seen;
  for (RequestCube& cube : cubes) {
    if (cube.IsEmpty()) continue;
    size_t h = CubeHash(cube);
    bool duplicate = false;
    auto [lo, hi] = seen.equal_range(h);
    for (auto it = lo; it != hi && !duplicate; ++it) {
      duplicate = out[it->second] == cube;
    }
    if (duplicate) continue;
    seen.emplace(h, out.size());
    out.push_back(std::move(cube));
  }
  return out;
}

absl::StatusOr<Dfa> PatternUnion(const std::vector<WildcardPattern>& patterns,
                                 const AutomatonLimits& limits) {
  Dfa result = Dfa::EmptyLanguage();
  for (const WildcardPattern& p : patterns) {
    POLSUM_ASSIGN_OR_RETURN(Dfa d, DfaFromPattern(p, limits));
    POLSUM_ASSIGN_OR_RETURN(result, Union(result, d, limits));
  }
  return result;
}

absl::StatusOr<Dfa> CompileClause(const PatternClause& clause,
                                  const AutomatonLimits& limits) {
  POLSUM_ASSIGN_OR_RETURN(Dfa d, PatternUnion(clause.patterns, limits));
  return clause.negated ? Complement(d) : d;
}

absl::StatusOr<RequestCube> CompileStatement(const Statement& stmt,
                                             const DimensionSchema& schema,
                                             const AutomatonLimits& limits) {
  RequestCube cube;
  cube.components.assign(schema.size(), Dfa::Universal());
  POLSUM_ASSIGN_OR_RETURN(cube.components[0],
                          CompileClause(stmt.principal, limits));
  POLSUM_ASSIGN_OR_RETURN(cube.components[1],
                          CompileClause(stmt.action, limits));
  POLSUM_ASSIGN_OR_RETURN(cube.components[2],
                          CompileClause(stmt.resource, limits));
  for (const Condition& cond : stmt.conditions) {
    size_t dim = *schema.IndexOf(cond.key);
    POLSUM_ASSIGN_OR_RETURN(Dfa d, CompileCondition(cond, limits));
    POLSUM_ASSIGN_OR_RETURN(cube.components[dim],
                            Intersect(cube.components[dim], d, limits));
  }
  return cube;
}

absl::StatusOr<std::optional<RequestCube>> IntersectCubes(
    const RequestCube& a, const RequestCube& b, const AutomatonLimits& limits) {
  RequestCube out;
  out.components.reserve(a.components.size());
  for (size_t i = 0; i < a.components.size(); ++i) {
    POLSUM_ASSIGN_OR_RETURN(Dfa d,
                            Intersect(a.components[i], b.components[i], limits));
    if (IsEmpty(d)) return std::optional<RequestCube>();
    out.components.push_back(std::move(d));
  }
  return std::optional<RequestCube>(std::move(out));
}

// Appends the pieces of a \ b to `out`.
absl::Status SubtractCube(const RequestCube& a, const RequestCube& b,
                          const AutomatonLimits& limits,
                          std::vector<RequestCube>& out) {
  const size_t k = a.components.size();
  std::vector<Dfa> common;
  common.reserve(k);
  for (size_t i = 0; i < k; ++i) {
    POLSUM_ASSIGN_OR_RETURN(Dfa d,
                            Intersect(a.components[i], b.components[i], limits));
    if (IsEmpty(d)) {
      // Disjoint: nothing is removed.
      out.push_back(a);
      return absl::OkStatus();
    }
    common.push_back(std::move(d));
  }
  for (size_t i = 0; i < k; ++i) {
    POLSUM_ASSIGN_OR_RETURN(
        Dfa rest, Difference(a.components[i], b.components[i], limits));
    if (IsEmpty(rest)) continue;
    RequestCube piece;
    piece.components.reserve(k);
    for (size_t j = 0; j < i; ++j) piece.components.push_back(common[j]);
    piece.components.push_back(std::move(rest));
    for (size_t j = i + 1; j < k; ++j) {
      piece.components.push_back(a.components[j]);
    }
    out.push_back(std::move(piece));
  }
  return absl::OkStatus();
}

std::pair<RequestSet, RequestSet> Align(const RequestSet& x,
                                        const RequestSet& y) {
  if (x.schema() == y.schema()) return {x, y};
  DimensionSchema merged = DimensionSchema::Merge(x.schema(), y.schema());
  return {x.Padded(merged), y.Padded(merged)};
}

}  // namespace

DimensionSchema::DimensionSchema()
    : dims_{std::string(kPrincipalDim), std::string(kActionDim),
            std::string(kResourceDim)} {}

absl::StatusOr<DimensionSchema> DimensionSchema::WithConditionKeys(
    const std::set<std::string>& keys) {
  DimensionSchema schema;
  for (const std::string& key : keys) {
    if (key == kPrincipalDim || key == kActionDim || key == kResourceDim) {
      return MakeError(ErrorKind::kSchema, "condition key '" + key +
                                               "' collides with a request "
                                               "dimension name");
    }
    schema.dims_.push_back(key);
  }
  return schema;
}

DimensionSchema DimensionSchema::Merge(const DimensionSchema& a,
                                       const DimensionSchema& b) {
  std::set<std::string> keys(a.dims_.begin() + 3, a.dims_.end());
  keys.insert(b.dims_.begin() + 3, b.dims_.end());
  DimensionSchema out;
  out.dims_.insert(out.dims_.end(), keys.begin(), keys.end());
  return out;
}

std::optional<size_t> DimensionSchema::IndexOf(std::string_view name) const {
  for (size_t i = 0; i < dims_.size(); ++i) {
    if (dims_[i] == name) return i;
  }
  return std::nullopt;
}

bool RequestCube::IsEmpty() const {
  for (const Dfa& d : components) {
    if (polsum::IsEmpty(d)) return true;
  }
  return false;
}

RequestSet::RequestSet(DimensionSchema schema, std::vector<RequestCube> cubes)
    : schema_(std::move(schema)), cubes_(Normalize(std::move(cubes))) {}

RequestSet RequestSet::Empty(DimensionSchema schema) {
  return RequestSet(std::move(schema), {});
}

RequestSet RequestSet::Universe(DimensionSchema schema) {
  RequestCube cube;
  cube.components.assign(schema.size(), Dfa::Universal());
  return RequestSet(std::move(schema), {std::move(cube)});
}

RequestSet RequestSet::Padded(const DimensionSchema& wider) const {
  std::vector<RequestCube> cubes;
  cubes.reserve(cubes_.size());
  for (const RequestCube& cube : cubes_) {
    RequestCube padded;
    padded.components.reserve(wider.size());
    for (const std::string& dim : wider.dims()) {
      std::optional<size_t> i = schema_.IndexOf(dim);
      padded.components.push_back(i.has_value() ? cube.components[*i]
                                                : Dfa::Universal());
    }
    cubes.push_back(std::move(padded));
  }
  return RequestSet(wider, std::move(cubes));
}

absl::StatusOr<Dfa> CompileCondition(const Condition& condition,
                                     const AutomatonLimits& limits) {
  POLSUM_ASSIGN_OR_RETURN(Dfa d, PatternUnion(condition.values, limits));
  return IsNegatedOperator(condition.op) ? Complement(d) : d;
}

absl::StatusOr<RequestSet> CompilePolicy(const PolicyDocument& doc,
                                         const SetLimits& limits) {
  std::set<std::string> keys;
  for (const Statement& s : doc.statements) {
    for (const Condition& c : s.conditions) keys.insert(c.key);
  }
  POLSUM_ASSIGN_OR_RETURN(DimensionSchema schema,
                          DimensionSchema::WithConditionKeys(keys));

  std::vector<RequestCube> allow, deny;
  for (const Statement& s : doc.statements) {
    POLSUM_ASSIGN_OR_RETURN(RequestCube cube,
                            CompileStatement(s, schema, limits.automaton()));
    (s.effect == Effect::kAllow ? allow : deny).push_back(std::move(cube));
  }
  RequestSet allowed(schema, std::move(allow));
  if (allowed.cubes().size() > limits.max_cubes) {
    return CubeBlowup(limits.max_cubes);
  }
  RequestSet denied(schema, std::move(deny));
  return SetDifference(allowed, denied, limits);
}

absl::StatusOr<RequestSet> SetUnion(const RequestSet& x, const RequestSet& y,
                                    const SetLimits& limits) {
  auto [a, b] = Align(x, y);
  std::vector<RequestCube> cubes = a.cubes();
  cubes.insert(cubes.end(), b.cubes().begin(), b.cubes().end());
  RequestSet out(a.schema(), std::move(cubes));
  if (out.cubes().size() > limits.max_cubes) {
    return CubeBlowup(limits.max_cubes);
  }
  return out;
}

absl::StatusOr<RequestSet> SetIntersect(const RequestSet& x,
                                        const RequestSet& y,
                                        const SetLimits& limits) {
  auto [a, b] = Align(x, y);
  std::vector<RequestCube> cubes;
  for (const RequestCube& p : a.cubes()) {
    for (const RequestCube& q : b.cubes()) {
      POLSUM_ASSIGN_OR_RETURN(std::optional<RequestCube> c,
                              IntersectCubes(p, q, limits.automaton()));
      if (c.has_value()) cubes.push_back(*std::move(c));
      if (cubes.size() > limits.max_cubes) return CubeBlowup(limits.max_cubes);
    }
  }
  return RequestSet(a.schema(), std::move(cubes));
}

absl::StatusOr<RequestSet> SetDifference(const RequestSet& x,
                                         const RequestSet& y,
                                         const SetLimits& limits) {
  auto [a, b] = Align(x, y);
  std::vector<RequestCube> current = a.cubes();
  for (const RequestCube& subtrahend : b.cubes()) {
    std::vector<RequestCube> next;
    for (const RequestCube& cube : current) {
      POLSUM_RETURN_IF_ERROR(
          SubtractCube(cube, subtrahend, limits.automaton(), next));
      if (next.size() > limits.max_cubes) return CubeBlowup(limits.max_cubes);
    }
    current = RequestSet(a.schema(), std::move(next)).cubes();
    if (current.empty()) break;
  }
  return RequestSet(a.schema(), std::move(current));
}

bool IsEmptySet(const RequestSet& x) {
  for (const RequestCube& cube : x.cubes()) {
    if (!cube.IsEmpty()) return false;
  }
  return true;
}

absl::StatusOr<Dfa> Project(const RequestSet& x, std::string_view dim,
                            const AutomatonLimits& limits) {
  std::optional<size_t> index = x.schema().IndexOf(dim);
  if (!index.has_value()) {
    return absl::NotFoundError("no dimension named '" + std::string(dim) +
                               "' in the request schema");
  }
  Dfa result = Dfa::EmptyLanguage();
  for (const RequestCube& cube : x.cubes()) {
    if (cube.IsEmpty()) continue;
    POLSUM_ASSIGN_OR_RETURN(result,
                            Union(result, cube.components[*index], limits));
  }
  return result;
}

std::vector<std::string> RequestTuple(const AccessRequest& request,
                                      const DimensionSchema& schema) {
  std::vector<std::string> tuple = {request.principal, request.action,
                                    request.resource};
  for (size_t i = 3; i < schema.size(); ++i) {
    auto it = request.context.find(schema.dims()[i]);
    tuple.push_back(it == request.context.end() ? "" : it->second);
  }
  return tuple;
}

AccessRequest RequestFromTuple(const std::vector<std::string>& tuple,
                               const DimensionSchema& schema) {
  AccessRequest r;
  r.principal = tuple[0];
  r.action = tuple[1];
  r.resource = tuple[2];
  for (size_t i = 3; i < schema.size(); ++i) {
    r.context[schema.dims()[i]] = tuple[i];
  }
  return r;
}

absl::StatusOr<bool> Contains(const RequestSet& x,
                              const AccessRequest& request) {
  std::vector<std::string> tuple = RequestTuple(request, x.schema());
  for (const std::string& v : tuple) POLSUM_RETURN_IF_ERROR(CheckAlphabet(v));
  for (const RequestCube& cube : x.cubes()) {
    bool member = true;
    for (size_t i = 0; i < tuple.size() && member; ++i) {
      member = *Accepts(cube.components[i], tuple[i]);
    }
    if (member) return true;
  }
  return false;
}

std::string_view DecisionName(Decision d) {
  return d == Decision::kAllow ? "Allow" : "Deny";
}

absl::StatusOr<Decision> DecideRequest(const PolicyDocument& doc,
                                       const AccessRequest& request,
                                       const SetLimits& limits) {
  POLSUM_ASSIGN_OR_RETURN(RequestSet allowed, CompilePolicy(doc, limits));
  POLSUM_ASSIGN_OR_RETURN(bool member, Contains(allowed, request));
  return member ? Decision::kAllow : Decision::kDeny;
}

}  // namespace polsum
