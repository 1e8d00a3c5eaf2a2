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

#ifndef POLSUM_SUMMARIZER_H_
#define POLSUM_SUMMARIZER_H_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "polsum/llm_provider.h"
#include "polsum/model_count.h"
#include "polsum/policy.h"
#include "polsum/regex.h"
#include "polsum/request_set.h"
#include "polsum/sampler.h"
#include "polsum/similarity.h"

namespace polsum {

struct SimplifierConfig {
  int samples = 1000;
  int bound = kDefaultCountBound;
  double threshold = 0.8;
  int attempts = 3;
  std::string dimension = std::string(kResourceDim);
  uint64_t seed = kDefaultSeed;
  bool include_extracted_regex_in_prompt = false;
  // When set, a provider failure aborts the run instead of counting as a
  // failed attempt.
  bool strict_provider = false;
  SetLimits limits;
};

absl::Status ValidateSimplifierConfig(const SimplifierConfig& config);

// One LLM reply turned into a regex.
struct LlmCandidate {
  std::string completion;
  // Line picked out of the completion; empty if there was none.
  std::string text;
  // CandidateUnparseable when `text` is missing or not in the dialect.
  absl::StatusOr<Regex> regex;
};

// Prompts `provider` with `samples` and parses the reply. Fails only with the
// provider's error.
absl::StatusOr<LlmCandidate> GenerateRegexFromLlm(
    const Regex& extracted, const std::vector<std::string>& samples,
    LlmProvider& provider, int attempt, uint64_t seed,
    const PromptOptions& options = {});

struct CandidateRecord {
  enum class Status { kOk, kUnparseable, kProviderError, kTooLarge };
  int attempt = 0;
  Status status = Status::kOk;
  // The line taken from the reply, as the model wrote it.
  std::string text;
  // PrintRegex of the parsed candidate. Set when status is kOk.
  std::string normalized;
  std::string error;
  // Against the projected language. Set when status is kOk.
  std::optional<Similarity> similarity;
};

std::string_view CandidateStatusName(CandidateRecord::Status status);

struct StageTimings {
  double compile_ms = 0;
  double extract_ms = 0;
  double sample_ms = 0;
  double llm_ms = 0;
  double similarity_ms = 0;
};

struct SummarizationReport {
  enum class Source { kEmptyLanguage, kCandidate, kExtracted };

  std::string dimension;
  // PrintRegex of the regex extracted from the projected DFA; the empty-set
  // token for an empty language.
  std::string extracted_regex;
  std::vector<std::string> samples;
  std::vector<CandidateRecord> candidates;
  Source source = Source::kEmptyLanguage;
  std::string chosen;
  // Attempt index of the chosen candidate, or -1.
  int chosen_attempt = -1;
  bool fallback = false;
  // Counts behind the chosen regex's similarity to the projected language.
  Similarity chosen_similarity{0, 0};
  int llm_calls = 0;
  StageTimings timings;
  SimplifierConfig config;
  std::vector<std::pair<std::string, std::string>> provider;
};

std::string_view SourceName(SummarizationReport::Source source);

// Summarizes the values `set` takes on config.dimension. `stream` selects an
// independent random stream derived from config.seed.
absl::StatusOr<SummarizationReport> SummarizeRequestSet(
    const RequestSet& set, const SimplifierConfig& config,
    LlmProvider& provider, uint64_t stream = 0);

// Compiles `doc` and summarizes its allowed requests.
absl::StatusOr<SummarizationReport> GenerateSummarization(
    const PolicyDocument& doc, const SimplifierConfig& config,
    LlmProvider& provider);

// Summaries of S1 \ S2 and S2 \ S1, in that order.
absl::StatusOr<std::pair<SummarizationReport, SummarizationReport>>
SummarizeDifference(const PolicyDocument& p1, const PolicyDocument& p2,
                    const SimplifierConfig& config, LlmProvider& provider);

}  // namespace polsum

#endif  // POLSUM_SUMMARIZER_H_
