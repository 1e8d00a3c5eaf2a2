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

#include "polsum/llm_provider.h"

#include <cctype>
#include <cstddef>
#include <cstdint>
#include <cstdio>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "json.hpp"
#include "polsum/sampler.h"
#include "polsum/status.h"

namespace polsum {
namespace {

using Json = nlohmann::ordered_json;

constexpr std::string_view kDialect =
    "Regex dialect:\n"
    "- literal characters; escape any of . * + ? ( ) [ ] | { } ^ $ \\ with a "
    "backslash\n"
    "- . matches any character\n"
    "- character classes [abc], ranges [a-z], negation [^abc]\n"
    "- shorthand classes \\d \\w \\s \\D \\W \\S\n"
    "- grouping ( ) and (?: ), alternation |\n"
    "- quantifiers * + ? {m} {m,n} {m,}\n"
    "- no lookaround, backreferences, lazy quantifiers or word boundaries\n";

std::string_view Trim(std::string_view s) {
  const char* kSpace = " \t\r\n\f\v";
  size_t begin = s.find_first_not_of(kSpace);
  if (begin == std::string_view::npos) return {};
  size_t end = s.find_last_not_of(kSpace);
  return s.substr(begin, end - begin + 1);
}

bool StartsWithIgnoreCase(std::string_view s, std::string_view prefix) {
  if (s.size() < prefix.size()) return false;
  for (size_t i = 0; i < prefix.size(); ++i) {
    if (std::tolower(static_cast<unsigned char>(s[i])) !=
        std::tolower(static_cast<unsigned char>(prefix[i]))) {
      return false;
    }
  }
  return true;
}

std::vector<std::string_view> SplitLines(std::string_view s) {
  std::vector<std::string_view> lines;
  size_t start = 0;
  while (true) {
    size_t nl = s.find('\n', start);
    if (nl == std::string_view::npos) {
      lines.push_back(s.substr(start));
      return lines;
    }
    lines.push_back(s.substr(start, nl - start));
    start = nl + 1;
  }
}

}  // namespace

absl::StatusOr<MockProviderConfig> ParseMockProviderConfig(
    std::string_view json_text) {
  Json j = Json::parse(json_text.begin(), json_text.end(), nullptr, false);
  if (j.is_discarded() || !j.is_object()) {
    return MakeError(ErrorKind::kSchema,
                     "mock provider config must be a JSON object");
  }
  MockProviderConfig config;
  try {
    for (const auto& [key, value] : j.items()) {
      if (key == "responses") {
        config.responses = value.get<std::vector<std::string>>();
      } else if (key == "canned") {
        config.canned = value.get<std::map<std::string, std::string>>();
      } else if (key == "random") {
        config.random_choice = value.get<bool>();
      } else if (key == "retries") {
        config.retries = value.get<int>();
      } else if (key == "faulty_calls") {
        config.faulty_calls = value.get<int>();
      } else if (key == "fault") {
        std::string fault = value.get<std::string>();
        if (fault == "none") {
          config.fault = MockProviderConfig::Fault::kNone;
        } else if (fault == "timeout") {
          config.fault = MockProviderConfig::Fault::kTimeout;
        } else if (fault == "error") {
          config.fault = MockProviderConfig::Fault::kError;
        } else {
          return MakeError(ErrorKind::kSchema, "unknown fault '" + fault + "'");
        }
      } else {
        return MakeError(ErrorKind::kSchema,
                         "unknown mock provider field '" + key + "'");
      }
    }
  } catch (const Json::exception& e) {
    return MakeError(ErrorKind::kSchema,
                     std::string("bad mock provider config: ") + e.what());
  }
  return config;
}

absl::StatusOr<std::string> MockProvider::Complete(const LlmRequest& request) {
  ++calls_;
  if (config_.fault != MockProviderConfig::Fault::kNone &&
      (config_.faulty_calls == 0 || calls_ <= config_.faulty_calls)) {
    return MakeError(ErrorKind::kProvider,
                     config_.fault == MockProviderConfig::Fault::kTimeout
                         ? "mock provider timed out"
                         : "mock provider transport error");
  }
  auto it = config_.canned.find(PromptHash(request.prompt));
  if (it != config_.canned.end()) return it->second;
  if (config_.responses.empty()) return request.extracted_regex;
  size_t index;
  if (config_.random_choice) {
    std::mt19937_64 rng(DeriveSeed(request.seed, request.attempt));
    index = UniformIndex(rng, config_.responses.size());
  } else {
    index = static_cast<size_t>(request.attempt) % config_.responses.size();
  }
  return config_.responses[index];
}

std::vector<std::pair<std::string, std::string>> MockProvider::ConfigEcho()
    const {
  std::string fault = "none";
  if (config_.fault == MockProviderConfig::Fault::kTimeout) fault = "timeout";
  if (config_.fault == MockProviderConfig::Fault::kError) fault = "error";
  return {{"provider", "mock"},
          {"responses", std::to_string(config_.responses.size())},
          {"canned", std::to_string(config_.canned.size())},
          {"random", config_.random_choice ? "true" : "false"},
          {"fault", fault}};
}

absl::StatusOr<std::string> RetryingProvider::Complete(
    const LlmRequest& request) {
  absl::Status last;
  for (int i = 0; i <= retries_; ++i) {
    absl::StatusOr<std::string> reply = inner_->Complete(request);
    if (reply.ok()) return reply;
    last = reply.status();
  }
  return MakeError(ErrorKind::kProvider,
                   "giving up after " + std::to_string(retries_ + 1) +
                       " tries: " + std::string(last.message()));
}

std::vector<std::pair<std::string, std::string>> RetryingProvider::ConfigEcho()
    const {
  auto echo = inner_->ConfigEcho();
  echo.emplace_back("retries", std::to_string(retries_));
  return echo;
}

std::string PromptHash(std::string_view prompt) {
  uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : prompt) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(h));
  return buf;
}

std::string BuildPrompt(const std::vector<std::string>& samples,
                        std::string_view extracted_regex,
                        const PromptOptions& options) {
  std::string prompt =
      "The following strings were sampled from a regular language. Write one "
      "short, readable regular expression that matches exactly this language, "
      "generalizing from the samples.\n\n";
  prompt += kDialect;
  if (options.include_extracted_regex) {
    prompt += "\nAn exact but complex regex for the language is:\n";
    prompt += extracted_regex;
    prompt += "\n";
  }
  prompt += "\nSamples (one per line):\n";
  for (const std::string& s : samples) {
    prompt += s;
    prompt += "\n";
  }
  prompt += "\nReply with exactly one line containing only the regex.\n";
  return prompt;
}

std::optional<std::string> ExtractCandidateLine(std::string_view completion) {
  std::vector<std::string_view> lines = SplitLines(completion);
  size_t begin = 0;
  size_t end = lines.size();
  for (size_t i = 0; i < lines.size(); ++i) {
    if (Trim(lines[i]).starts_with("```")) {
      begin = i + 1;
      for (size_t k = begin; k < lines.size(); ++k) {
        if (Trim(lines[k]).starts_with("```")) {
          end = k;
          break;
        }
      }
      break;
    }
  }
  for (size_t i = begin; i < end; ++i) {
    std::string_view line = Trim(lines[i]);
    if (StartsWithIgnoreCase(line, "regex:")) {
      line = Trim(line.substr(6));
    }
    while (line.size() >= 2 && line.front() == '`' && line.back() == '`') {
      line = Trim(line.substr(1, line.size() - 2));
    }
    if (!line.empty()) return std::string(line);
  }
  return std::nullopt;
}

}  // namespace polsum
