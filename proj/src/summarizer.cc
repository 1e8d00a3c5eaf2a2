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

#include "polsum/summarizer.h"

#include <chrono>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "polsum/automaton.h"
#include "polsum/model_count.h"
#include "polsum/regex.h"
#include "polsum/regex_extraction.h"
#include "polsum/regex_parser.h"
#include "polsum/request_set.h"
#include "polsum/sampler.h"
#include "polsum/similarity.h"
#include "polsum/status.h"

namespace polsum {
namespace {

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double ElapsedMs() const {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

// True if `a` should be preferred over the current best `b`.
bool Better(const CandidateRecord& a, const CandidateRecord& b) {
  Rational ja = a.similarity->value();
  Rational jb = b.similarity->value();
  if (ja != jb) return ja > jb;
  if (a.normalized.size() != b.normalized.size()) {
    return a.normalized.size() < b.normalized.size();
  }
  return a.attempt < b.attempt;
}

// The threshold as the decimal it was written as (9 digits), so that e.g.
// J = 4/5 meets t = 0.8.
Rational ThresholdAsRational(double t) {
  return Rational(static_cast<int64_t>(std::llround(t * 1e9)), 1000000000);
}

SummarizationReport EmptyReport(const SimplifierConfig& config,
                                const LlmProvider& provider) {
  SummarizationReport report;
  report.dimension = config.dimension;
  report.extracted_regex = std::string(kEmptySetToken);
  report.chosen = std::string(kEmptySetToken);
  report.source = SummarizationReport::Source::kEmptyLanguage;
  report.config = config;
  report.provider = provider.ConfigEcho();
  return report;
}

}  // namespace

absl::Status ValidateSimplifierConfig(const SimplifierConfig& config) {
  if (config.samples < 1) {
    return absl::InvalidArgumentError("sample size must be >= 1");
  }
  if (config.bound < 0) return absl::InvalidArgumentError("bound must be >= 0");
  if (!(config.threshold >= 0 && config.threshold <= 1)) {
    return absl::InvalidArgumentError("threshold must be in [0, 1]");
  }
  if (config.attempts < 1) {
    return absl::InvalidArgumentError("attempts must be >= 1");
  }
  return absl::OkStatus();
}

std::string_view CandidateStatusName(CandidateRecord::Status status) {
  switch (status) {
    case CandidateRecord::Status::kOk:
      return "ok";
    case CandidateRecord::Status::kUnparseable:
      return "unparseable";
    case CandidateRecord::Status::kProviderError:
      return "provider_error";
    case CandidateRecord::Status::kTooLarge:
      return "too_large";
  }
  return "unknown";
}

std::string_view SourceName(SummarizationReport::Source source) {
  switch (source) {
    case SummarizationReport::Source::kEmptyLanguage:
      return "empty";
    case SummarizationReport::Source::kCandidate:
      return "llm";
    case SummarizationReport::Source::kExtracted:
      return "extracted";
  }
  return "unknown";
}

absl::StatusOr<LlmCandidate> GenerateRegexFromLlm(
    const Regex& extracted, const std::vector<std::string>& samples,
    LlmProvider& provider, int attempt, uint64_t seed,
    const PromptOptions& options) {
  LlmRequest request;
  request.extracted_regex = PrintRegex(extracted);
  request.prompt = BuildPrompt(samples, request.extracted_regex, options);
  request.attempt = attempt;
  request.seed = seed;
  POLSUM_ASSIGN_OR_RETURN(std::string completion, provider.Complete(request));

  LlmCandidate candidate{completion, "", absl::UnknownError("unset")};
  std::optional<std::string> line = ExtractCandidateLine(completion);
  if (!line.has_value()) {
    candidate.regex = MakeError(ErrorKind::kCandidateUnparseable,
                                "the reply contains no regex line");
    return candidate;
  }
  candidate.text = *line;
  absl::StatusOr<Regex> parsed = ParseRegex(*line);
  if (parsed.ok()) {
    candidate.regex = *std::move(parsed);
  } else {
    candidate.regex = MakeError(ErrorKind::kCandidateUnparseable,
                                std::string(parsed.status().message()));
  }
  return candidate;
}

absl::StatusOr<SummarizationReport> SummarizeRequestSet(
    const RequestSet& set, const SimplifierConfig& config,
    LlmProvider& provider, uint64_t stream) {
  POLSUM_RETURN_IF_ERROR(ValidateSimplifierConfig(config));
  if (!set.schema().IndexOf(config.dimension).has_value()) {
    return absl::InvalidArgumentError("unknown dimension '" +
                                      config.dimension + "'");
  }
  SummarizationReport report = EmptyReport(config, provider);
  if (IsEmptySet(set)) return report;

  const AutomatonLimits limits = config.limits.automaton();
  Stopwatch extract_clock;
  POLSUM_ASSIGN_OR_RETURN(Dfa projected,
                          Project(set, config.dimension, limits));
  Regex extracted = ExtractRegex(projected);
  report.extracted_regex = PrintRegex(extracted);
  report.timings.extract_ms = extract_clock.ElapsedMs();

  Stopwatch sample_clock;
  SamplerConfig sampler_config;
  sampler_config.seed = DeriveSeed(config.seed, 2 * stream);
  POLSUM_ASSIGN_OR_RETURN(report.samples,
                          SampleN(extracted, config.samples, sampler_config));
  report.timings.sample_ms = sample_clock.ElapsedMs();

  PromptOptions prompt_options;
  prompt_options.include_extracted_regex =
      config.include_extracted_regex_in_prompt;
  const uint64_t provider_seed = DeriveSeed(config.seed, 2 * stream + 1);
  for (int attempt = 0; attempt < config.attempts; ++attempt) {
    CandidateRecord record;
    record.attempt = attempt;
    Stopwatch llm_clock;
    absl::StatusOr<LlmCandidate> candidate =
        GenerateRegexFromLlm(extracted, report.samples, provider, attempt,
                             provider_seed, prompt_options);
    ++report.llm_calls;
    report.timings.llm_ms += llm_clock.ElapsedMs();
    if (!candidate.ok()) {
      if (config.strict_provider) return candidate.status();
      record.status = CandidateRecord::Status::kProviderError;
      record.error = std::string(candidate.status().message());
      report.candidates.push_back(std::move(record));
      continue;
    }
    record.text = candidate->text;
    if (!candidate->regex.ok()) {
      record.status = CandidateRecord::Status::kUnparseable;
      record.error = std::string(candidate->regex.status().message());
      report.candidates.push_back(std::move(record));
      continue;
    }
    record.normalized = PrintRegex(*candidate->regex);
    Stopwatch similarity_clock;
    absl::StatusOr<Dfa> candidate_dfa = DfaFromRegex(*candidate->regex, limits);
    absl::StatusOr<Similarity> similarity =
        candidate_dfa.ok()
            ? QuantifySimilarity(projected, *candidate_dfa, config.bound,
                                 limits)
            : absl::StatusOr<Similarity>(candidate_dfa.status());
    report.timings.similarity_ms += similarity_clock.ElapsedMs();
    if (!similarity.ok()) {
      // An oversized candidate is a failed attempt, not a failed run.
      record.status = CandidateRecord::Status::kTooLarge;
      record.error = std::string(similarity.status().message());
    } else {
      record.similarity = *similarity;
    }
    report.candidates.push_back(std::move(record));
  }

  const Rational threshold = ThresholdAsRational(config.threshold);
  const CandidateRecord* best = nullptr;
  for (const CandidateRecord& c : report.candidates) {
    if (!c.similarity.has_value()) continue;
    if (c.similarity->value() < threshold) continue;
    if (best == nullptr || Better(c, *best)) best = &c;
  }
  if (best != nullptr) {
    report.source = SummarizationReport::Source::kCandidate;
    report.chosen = best->text;
    report.chosen_attempt = best->attempt;
    report.chosen_similarity = *best->similarity;
  } else {
    ModelCount count = CountModels(projected, config.bound);
    report.source = SummarizationReport::Source::kExtracted;
    report.chosen = report.extracted_regex;
    report.fallback = true;
    report.chosen_similarity = Similarity{count, count};
  }
  return report;
}

absl::StatusOr<SummarizationReport> GenerateSummarization(
    const PolicyDocument& doc, const SimplifierConfig& config,
    LlmProvider& provider) {
  POLSUM_RETURN_IF_ERROR(ValidateSimplifierConfig(config));
  Stopwatch compile_clock;
  POLSUM_ASSIGN_OR_RETURN(RequestSet allowed,
                          CompilePolicy(doc, config.limits));
  double compile_ms = compile_clock.ElapsedMs();
  POLSUM_ASSIGN_OR_RETURN(SummarizationReport report,
                          SummarizeRequestSet(allowed, config, provider));
  report.timings.compile_ms = compile_ms;
  return report;
}

absl::StatusOr<std::pair<SummarizationReport, SummarizationReport>>
SummarizeDifference(const PolicyDocument& p1, const PolicyDocument& p2,
                    const SimplifierConfig& config, LlmProvider& provider) {
  POLSUM_RETURN_IF_ERROR(ValidateSimplifierConfig(config));
  Stopwatch compile_clock;
  POLSUM_ASSIGN_OR_RETURN(RequestSet s1, CompilePolicy(p1, config.limits));
  POLSUM_ASSIGN_OR_RETURN(RequestSet s2, CompilePolicy(p2, config.limits));
  POLSUM_ASSIGN_OR_RETURN(RequestSet f1, SetDifference(s1, s2, config.limits));
  POLSUM_ASSIGN_OR_RETURN(RequestSet f2, SetDifference(s2, s1, config.limits));
  double compile_ms = compile_clock.ElapsedMs();
  POLSUM_ASSIGN_OR_RETURN(SummarizationReport first,
                          SummarizeRequestSet(f1, config, provider, 1));
  POLSUM_ASSIGN_OR_RETURN(SummarizationReport second,
                          SummarizeRequestSet(f2, config, provider, 2));
  first.timings.compile_ms = compile_ms;
  second.timings.compile_ms = compile_ms;
  return std::make_pair(std::move(first), std::move(second));
}

}  // namespace polsum
