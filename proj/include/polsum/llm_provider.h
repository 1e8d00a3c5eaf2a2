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

#ifndef POLSUM_LLM_PROVIDER_H_
#define POLSUM_LLM_PROVIDER_H_

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "absl/status/statusor.h"

namespace polsum {

struct LlmRequest {
  std::string prompt;
  // 0-based attempt index within one summarization.
  int attempt = 0;
  uint64_t seed = 0;
  // Printed extracted regex. Not part of the prompt unless requested; the
  // mock provider uses it as its default reply.
  std::string extracted_regex;
};

// Text-in, text-out completion service.
class LlmProvider {
 public:
  virtual ~LlmProvider() = default;

  virtual std::string name() const = 0;

  // Failures are ProviderError.
  virtual absl::StatusOr<std::string> Complete(const LlmRequest& request) = 0;

  // Settings safe to echo into reports. Never includes credentials.
  virtual std::vector<std::pair<std::string, std::string>> ConfigEcho()
      const = 0;
};

struct MockProviderConfig {
  enum class Fault { kNone, kTimeout, kError };

  // Replies keyed by PromptHash(prompt). Checked first.
  std::map<std::string, std::string> canned;
  // Otherwise replies[attempt % size], or a seeded random pick when
  // `random_choice` is set. With no replies the provider echoes
  // LlmRequest::extracted_regex.
  std::vector<std::string> responses;
  bool random_choice = false;
  Fault fault = Fault::kNone;
  // The first this-many calls fail with `fault` (0 = every call, when a fault
  // is set).
  int faulty_calls = 0;
  // Extra tries a RetryingProvider should make around this provider.
  int retries = 0;
};

// Parses a mock configuration:
//   {"responses": [...], "canned": {"<hash>": "..."}, "random": false,
//    "fault": "none" | "timeout" | "error", "faulty_calls": 0, "retries": 0}
// All fields are optional. SchemaError on malformed input.
absl::StatusOr<MockProviderConfig> ParseMockProviderConfig(
    std::string_view json_text);

// Deterministic offline provider.
class MockProvider : public LlmProvider {
 public:
  MockProvider() = default;
  explicit MockProvider(MockProviderConfig config)
      : config_(std::move(config)) {}

  std::string name() const override { return "mock"; }
  absl::StatusOr<std::string> Complete(const LlmRequest& request) override;
  std::vector<std::pair<std::string, std::string>> ConfigEcho() const override;

  int calls() const { return calls_; }

 private:
  MockProviderConfig config_;
  int calls_ = 0;
};

// Retries `inner` up to `retries` extra times, then returns ProviderError
// carrying the last failure.
class RetryingProvider : public LlmProvider {
 public:
  RetryingProvider(std::unique_ptr<LlmProvider> inner, int retries)
      : inner_(std::move(inner)), retries_(retries) {}

  std::string name() const override { return inner_->name(); }
  absl::StatusOr<std::string> Complete(const LlmRequest& request) override;
  std::vector<std::pair<std::string, std::string>> ConfigEcho() const override;

  LlmProvider& inner() { return *inner_; }

 private:
  std::unique_ptr<LlmProvider> inner_;
  int retries_;
};

// 16 lowercase hex digits of the 64-bit FNV-1a hash.
std::string PromptHash(std::string_view prompt);

struct PromptOptions {
  bool include_extracted_regex = false;
};

// Prompt asking for one regex generalizing `samples`, with a description of
// the accepted dialect.
std::string BuildPrompt(const std::vector<std::string>& samples,
                        std::string_view extracted_regex,
                        const PromptOptions& options = {});

// The candidate regex in a completion: the first non-blank line inside the
// first ``` fence if there is one, else the first non-blank line. Surrounding
// whitespace, backticks and a leading "regex:" label are removed. nullopt if
// the completion has no such line.
std::optional<std::string> ExtractCandidateLine(std::string_view completion);

}  // namespace polsum

#endif  // POLSUM_LLM_PROVIDER_H_
