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

#ifndef POLSUM_REQUEST_SET_H_
#define POLSUM_REQUEST_SET_H_

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"
#include "polsum/automaton.h"
#include "polsum/policy.h"

namespace polsum {

inline constexpr size_t kDefaultMaxCubes = 10'000;

struct SetLimits {
  size_t max_states = kDefaultMaxStates;
  // Exceeding this many cubes in one set fails with CubeBlowup.
  size_t max_cubes = kDefaultMaxCubes;

  AutomatonLimits automaton() const { return {max_states}; }
};

inline constexpr std::string_view kPrincipalDim = "principal";
inline constexpr std::string_view kActionDim = "action";
inline constexpr std::string_view kResourceDim = "resource";

// Request dimensions: principal, action, resource, then condition keys in
// lexicographic order.
class DimensionSchema {
 public:
  DimensionSchema();

  // Fails with SchemaError if a key collides with a fixed dimension name.
  static absl::StatusOr<DimensionSchema> WithConditionKeys(
      const std::set<std::string>& keys);

  // Schema holding the dimensions of both.
  static DimensionSchema Merge(const DimensionSchema& a,
                               const DimensionSchema& b);

  const std::vector<std::string>& dims() const { return dims_; }
  size_t size() const { return dims_.size(); }
  std::optional<size_t> IndexOf(std::string_view name) const;

  friend bool operator==(const DimensionSchema&,
                         const DimensionSchema&) = default;

 private:
  std::vector<std::string> dims_;
};

// Product of per-dimension languages.
struct RequestCube {
  std::vector<Dfa> components;

  // Empty as a set iff some component is empty.
  bool IsEmpty() const;

  friend bool operator==(const RequestCube&, const RequestCube&) = default;
};

// A set of request tuples represented as a union of cubes. Dimensions a cube
// does not constrain hold the universal language.
class RequestSet {
 public:
  // The empty set over the default schema.
  RequestSet() = default;
  // Empty cubes are dropped and duplicates removed. Every cube must have one
  // component per schema dimension.
  RequestSet(DimensionSchema schema, std::vector<RequestCube> cubes);

  static RequestSet Empty(DimensionSchema schema);
  static RequestSet Universe(DimensionSchema schema);

  const DimensionSchema& schema() const { return schema_; }
  const std::vector<RequestCube>& cubes() const { return cubes_; }

  // The same set over `wider`, which must contain every dimension of schema().
  RequestSet Padded(const DimensionSchema& wider) const;

 private:
  DimensionSchema schema_;
  std::vector<RequestCube> cubes_;
};

// Language of the values admitted by one condition: the union of its values,
// complemented for StringNotEquals/StringNotLike.
absl::StatusOr<Dfa> CompileCondition(const Condition& condition,
                                     const AutomatonLimits& limits = {});

// One cube per statement (pattern unions per field, negated clauses
// complemented, one dimension per condition key with that key's conditions
// intersected). Returns (union of Allow cubes) minus (union of Deny cubes),
// over the schema of all condition keys in the document.
absl::StatusOr<RequestSet> CompilePolicy(const PolicyDocument& doc,
                                         const SetLimits& limits = {});

// Exact set operations. Operands are first padded to a common schema.
// Difference uses
//   A \ B = ⋃_i (A1∩B1) × … × (A[i-1]∩B[i-1]) × (Ai \ Bi) × A[i+1] × … × Ak.
absl::StatusOr<RequestSet> SetUnion(const RequestSet& x, const RequestSet& y,
                                    const SetLimits& limits = {});
absl::StatusOr<RequestSet> SetIntersect(const RequestSet& x,
                                        const RequestSet& y,
                                        const SetLimits& limits = {});
absl::StatusOr<RequestSet> SetDifference(const RequestSet& x,
                                         const RequestSet& y,
                                         const SetLimits& limits = {});

bool IsEmptySet(const RequestSet& x);

// Values that dimension `dim` takes across the set. NotFound if `dim` is not
// in the schema.
absl::StatusOr<Dfa> Project(const RequestSet& x, std::string_view dim,
                            const AutomatonLimits& limits = {});

struct AccessRequest {
  std::string principal;
  std::string action;
  std::string resource;
  // Condition-key values. A key some statement conditions on but that is
  // absent here is evaluated as the empty string.
  std::map<std::string, std::string> context;

  friend bool operator==(const AccessRequest&, const AccessRequest&) = default;
};

// Per-dimension values of `request` in `schema` order.
std::vector<std::string> RequestTuple(const AccessRequest& request,
                                      const DimensionSchema& schema);
AccessRequest RequestFromTuple(const std::vector<std::string>& tuple,
                               const DimensionSchema& schema);

// AlphabetError if any value has characters outside the alphabet.
absl::StatusOr<bool> Contains(const RequestSet& x,
                              const AccessRequest& request);

enum class Decision { kAllow, kDeny };

std::string_view DecisionName(Decision d);

// Allow iff the request is in CompilePolicy(doc).
absl::StatusOr<Decision> DecideRequest(const PolicyDocument& doc,
                                       const AccessRequest& request,
                                       const SetLimits& limits = {});

}  // namespace polsum

#endif  // POLSUM_REQUEST_SET_H_
