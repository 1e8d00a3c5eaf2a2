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

#ifndef POLSUM_HTTP_PROVIDER_H_
#define POLSUM_HTTP_PROVIDER_H_

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "absl/status/statusor.h"
#include "polsum/llm_provider.h"

namespace polsum {

// Environment variable that, when set, replaces the configured API key.
inline constexpr char kApiKeyEnvVar[] = "POLSUM_API_KEY";

struct HttpProviderConfig {
  // Full URL of an OpenAI-compatible chat completions endpoint, e.g.
  // https://api.example.com/v1/chat/completions.
  std::string endpoint;
  std::string model;
  double temperature = 0.0;
  int timeout_seconds = 60;
  // Extra tries after a failed call.
  int retries = 2;
  std::string api_key;
};

// Parses {"endpoint", "model", "temperature", "timeout_seconds", "retries",
// "api_key"}. `endpoint` and `model` are required. Applies the environment
// override for the key. SchemaError on malformed input.
absl::StatusOr<HttpProviderConfig> ParseHttpProviderConfig(
    std::string_view json_text);

// Sends the prompt as a single user message and returns the first choice's
// message content.
class HttpProvider : public LlmProvider {
 public:
  explicit HttpProvider(HttpProviderConfig config)
      : config_(std::move(config)) {}

  std::string name() const override { return "http"; }
  absl::StatusOr<std::string> Complete(const LlmRequest& request) override;
  std::vector<std::pair<std::string, std::string>> ConfigEcho() const override;

  const HttpProviderConfig& config() const { return config_; }

 private:
  HttpProviderConfig config_;
};

}  // namespace polsum

#endif  // POLSUM_HTTP_PROVIDER_H_
