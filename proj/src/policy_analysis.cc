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

#include "polsum/policy_analysis.h"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "polsum/regex_extraction.h"
#include "polsum/request_set.h"
#include "polsum/sampler.h"
#include "polsum/status.h"

namespace polsum {
namespace {

// Draws per requested request before giving up on finding new ones.
constexpr int kDrawsPerRequest = 20;

absl::Status CheckWitness(const RequestSet& member_of,
                          const RequestSet& excluded_from,
                          const AccessRequest& request) {
  POLSUM_ASSIGN_OR_RETURN(bool in, Contains(member_of, request));
  POLSUM_ASSIGN_OR_RETURN(bool out, Contains(excluded_from, request));
  if (!in || out) {
    return absl::InternalError("sampled request failed verification");
  }
  return absl::OkStatus();
}

}  // namespace

std::string_view VerdictName(PermissivenessVerdict::Kind kind) {
  switch (kind) {
    case PermissivenessVerdict::Kind::kEquivalent:
      return "Equivalent";
    case PermissivenessVerdict::Kind::kFirstMorePermissive:
      return "FirstMorePermissive";
    case PermissivenessVerdict::Kind::kSecondMorePermissive:
      return "SecondMorePermissive";
    case PermissivenessVerdict::Kind::kIncomparable:
      return "Incomparable";
  }
  return "Unknown";
}

absl::StatusOr<std::vector<AccessRequest>> DrawRequests(const RequestSet& set,
                                                        int k, uint64_t seed) {
  std::vector<AccessRequest> out;
  if (k <= 0 || IsEmptySet(set)) return out;

  // Samplers are built lazily, one per (cube, dimension).
  const size_t dims = set.schema().size();
  std::vector<std::vector<std::optional<RegexSampler>>> samplers(
      set.cubes().size(), std::vector<std::optional<RegexSampler>>(dims));
  SamplerConfig config;
  std::mt19937_64 rng(seed);
  std::set<std::vector<std::string>> seen;
  for (int draw = 0; draw < k * kDrawsPerRequest &&
                     static_cast<int>(out.size()) < k;
       ++draw) {
    size_t c = UniformIndex(rng, set.cubes().size());
    std::vector<std::string> tuple;
    tuple.reserve(dims);
    for (size_t d = 0; d < dims; ++d) {
      std::optional<RegexSampler>& sampler = samplers[c][d];
      if (!sampler.has_value()) {
        POLSUM_ASSIGN_OR_RETURN(
            sampler,
            RegexSampler::Create(ExtractRegex(set.cubes()[c].components[d]),
                                 config));
      }
      tuple.push_back(sampler->Sample(rng));
    }
    if (seen.insert(tuple).second) {
      out.push_back(RequestFromTuple(tuple, set.schema()));
    }
  }
  return out;
}

absl::StatusOr<PermissivenessVerdict> ComparePolicies(
    const PolicyDocument& p1, const PolicyDocument& p2, int witness_count,
    uint64_t seed, const SetLimits& limits) {
  POLSUM_ASSIGN_OR_RETURN(RequestSet s1, CompilePolicy(p1, limits));
  POLSUM_ASSIGN_OR_RETURN(RequestSet s2, CompilePolicy(p2, limits));
  POLSUM_ASSIGN_OR_RETURN(RequestSet f1, SetDifference(s1, s2, limits));
  POLSUM_ASSIGN_OR_RETURN(RequestSet f2, SetDifference(s2, s1, limits));

  PermissivenessVerdict verdict;
  const bool f1_empty = IsEmptySet(f1);
  const bool f2_empty = IsEmptySet(f2);
  using Kind = PermissivenessVerdict::Kind;
  if (f1_empty && f2_empty) {
    verdict.kind = Kind::kEquivalent;
  } else if (f2_empty) {
    verdict.kind = Kind::kFirstMorePermissive;
  } else if (f1_empty) {
    verdict.kind = Kind::kSecondMorePermissive;
  } else {
    verdict.kind = Kind::kIncomparable;
  }

  POLSUM_ASSIGN_OR_RETURN(verdict.first_only,
                          DrawRequests(f1, witness_count, DeriveSeed(seed, 1)));
  POLSUM_ASSIGN_OR_RETURN(verdict.second_only,
                          DrawRequests(f2, witness_count, DeriveSeed(seed, 2)));
  for (const AccessRequest& r : verdict.first_only) {
    POLSUM_RETURN_IF_ERROR(CheckWitness(s1, s2, r));
  }
  for (const AccessRequest& r : verdict.second_only) {
    POLSUM_RETURN_IF_ERROR(CheckWitness(s2, s1, r));
  }
  return verdict;
}

absl::StatusOr<RequestSamples> SampleRequests(const PolicyDocument& doc, int k,
                                              uint64_t seed,
                                              const SetLimits& limits) {
  RequestSamples samples;
  if (k <= 0) return samples;
  POLSUM_ASSIGN_OR_RETURN(RequestSet allowed, CompilePolicy(doc, limits));
  POLSUM_ASSIGN_OR_RETURN(
      RequestSet denied,
      SetDifference(RequestSet::Universe(allowed.schema()), allowed, limits));
  if (IsEmptySet(allowed)) {
    return MakeError(ErrorKind::kInsufficientLanguage,
                     "the policy allows no requests");
  }
  if (IsEmptySet(denied)) {
    return MakeError(ErrorKind::kInsufficientLanguage,
                     "the policy denies no requests");
  }
  POLSUM_ASSIGN_OR_RETURN(samples.allowed,
                          DrawRequests(allowed, k, DeriveSeed(seed, 1)));
  POLSUM_ASSIGN_OR_RETURN(samples.denied,
                          DrawRequests(denied, k, DeriveSeed(seed, 2)));
  for (const AccessRequest& r : samples.allowed) {
    POLSUM_ASSIGN_OR_RETURN(bool in, Contains(allowed, r));
    if (!in) return absl::InternalError("sampled allow failed verification");
  }
  for (const AccessRequest& r : samples.denied) {
    POLSUM_ASSIGN_OR_RETURN(bool in, Contains(allowed, r));
    if (in) return absl::InternalError("sampled deny failed verification");
  }
  if (static_cast<int>(samples.allowed.size()) < k ||
      static_cast<int>(samples.denied.size()) < k) {
    return MakeError(ErrorKind::kInsufficientLanguage,
                     "fewer than " + std::to_string(k) +
                         " distinct requests on one side");
  }
  return samples;
}

}  // namespace polsum
