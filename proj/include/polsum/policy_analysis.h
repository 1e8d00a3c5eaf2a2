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

#ifndef POLSUM_POLICY_ANALYSIS_H_
#define POLSUM_POLICY_ANALYSIS_H_

#include <cstdint>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"
#include "polsum/policy.h"
#include "polsum/request_set.h"
#include "polsum/sampler.h"

namespace polsum {

struct PermissivenessVerdict {
  enum class Kind {
    kEquivalent,
    kFirstMorePermissive,
    kSecondMorePermissive,
    kIncomparable,
  };
  Kind kind = Kind::kEquivalent;
  // Requests allowed by the first policy and denied by the second.
  std::vector<AccessRequest> first_only;
  // Requests allowed by the second policy and denied by the first.
  std::vector<AccessRequest> second_only;
};

std::string_view VerdictName(PermissivenessVerdict::Kind kind);

// Classifies by emptiness of S1 \ S2 and S2 \ S1, attaching up to
// `witness_count` requests from each non-empty side. Every witness is checked
// against both compiled policies.
absl::StatusOr<PermissivenessVerdict> ComparePolicies(
    const PolicyDocument& p1, const PolicyDocument& p2, int witness_count,
    uint64_t seed = kDefaultSeed, const SetLimits& limits = {});

// Up to `k` distinct members of `set`. A cube is picked uniformly per draw and
// each of its components sampled from the regex extracted from its DFA.
// Returns fewer than `k` when the set is small or draws keep repeating; an
// empty set yields an empty list.
absl::StatusOr<std::vector<AccessRequest>> DrawRequests(
    const RequestSet& set, int k, uint64_t seed);

struct RequestSamples {
  std::vector<AccessRequest> allowed;
  std::vector<AccessRequest> denied;
};

// `k` requests the policy allows and `k` it denies, each confirmed against the
// compiled policy. InsufficientLanguage if k > 0 and either side is empty.
absl::StatusOr<RequestSamples> SampleRequests(const PolicyDocument& doc, int k,
                                              uint64_t seed = kDefaultSeed,
                                              const SetLimits& limits = {});

}  // namespace polsum

#endif  // POLSUM_POLICY_ANALYSIS_H_
