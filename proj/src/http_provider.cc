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

#include "polsum/http_provider.h"

#include <cstdlib>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "httplib.h"
#include "json.hpp"
#include "polsum/status.h"

namespace polsum {
namespace {

using Json = nlohmann::ordered_json;

struct Endpoint {
  std::string base;  // scheme://host[:port]
  std::string path;
};

absl::StatusOr<Endpoint> SplitEndpoint(const std::string& url) {
  size_t scheme_end = url.find("://");
  if (scheme_end == std::string::npos) {
    return MakeError(ErrorKind::kSchema,
                     "endpoint must start with http:// or https://");
  }
  std::string scheme = url.substr(0, scheme_end);
  if (scheme != "http" && scheme != "https") {
    return MakeError(ErrorKind::kSchema, "unsupported scheme '" + scheme + "'");
  }
  size_t path_start = url.find('/', scheme_end + 3);
  if (path_start == std::string::npos) return Endpoint{url, "/"};
  return Endpoint{url.substr(0, path_start), url.substr(path_start)};
}

}  // namespace

absl::StatusOr<HttpProviderConfig> ParseHttpProviderConfig(
    std::string_view json_text) {
  Json j = Json::parse(json_text.begin(), json_text.end(), nullptr, false);
  if (j.is_discarded() || !j.is_object()) {
    return MakeError(ErrorKind::kSchema,
                     "http provider config must be a JSON object");
  }
  HttpProviderConfig config;
  try {
    for (const auto& [key, value] : j.items()) {
      if (key == "endpoint") {
        config.endpoint = value.get<std::string>();
      } else if (key == "model") {
        config.model = value.get<std::string>();
      } else if (key == "temperature") {
        config.temperature = value.get<double>();
      } else if (key == "timeout_seconds") {
        config.timeout_seconds = value.get<int>();
      } else if (key == "retries") {
        config.retries = value.get<int>();
      } else if (key == "api_key") {
        config.api_key = value.get<std::string>();
      } else {
        return MakeError(ErrorKind::kSchema,
                         "unknown http provider field '" + key + "'");
      }
    }
  } catch (const Json::exception& e) {
    return MakeError(ErrorKind::kSchema,
                     std::string("bad http provider config: ") + e.what());
  }
  if (config.endpoint.empty() || config.model.empty()) {
    return MakeError(ErrorKind::kSchema,
                     "http provider config needs 'endpoint' and 'model'");
  }
  if (config.timeout_seconds < 1 || config.retries < 0) {
    return MakeError(ErrorKind::kSchema,
                     "timeout_seconds must be >= 1 and retries >= 0");
  }
  POLSUM_RETURN_IF_ERROR(SplitEndpoint(config.endpoint).status());
  if (const char* key = std::getenv(kApiKeyEnvVar); key != nullptr) {
    config.api_key = key;
  }
  return config;
}

absl::StatusOr<std::string> HttpProvider::Complete(const LlmRequest& request) {
  POLSUM_ASSIGN_OR_RETURN(Endpoint endpoint, SplitEndpoint(config_.endpoint));
  httplib::Client client(endpoint.base);
  client.set_connection_timeout(config_.timeout_seconds);
  client.set_read_timeout(config_.timeout_seconds);
  client.set_write_timeout(config_.timeout_seconds);

  httplib::Headers headers;
  if (!config_.api_key.empty()) {
    headers.emplace("Authorization", "Bearer " + config_.api_key);
  }
  Json body = {
      {"model", config_.model},
      {"temperature", config_.temperature},
      {"seed", request.seed},
      {"messages", Json::array({{{"role", "user"},
                                 {"content", request.prompt}}})},
  };
  httplib::Result result =
      client.Post(endpoint.path, headers, body.dump(), "application/json");
  if (!result) {
    return MakeError(ErrorKind::kProvider,
                     "request failed: " + httplib::to_string(result.error()));
  }
  if (result->status != 200) {
    return MakeError(ErrorKind::kProvider,
                     "endpoint returned HTTP " + std::to_string(result->status));
  }
  Json reply = Json::parse(result->body, nullptr, false);
  try {
    if (!reply.is_discarded()) {
      return reply.at("choices").at(0).at("message").at("content")
          .get<std::string>();
    }
  } catch (const Json::exception&) {
  }
  return MakeError(ErrorKind::kProvider,
                   "response has no choices[0].message.content");
}

std::vector<std::pair<std::string, std::string>> HttpProvider::ConfigEcho()
    const {
  return {{"provider", "http"},
          {"endpoint", config_.endpoint},
          {"model", config_.model},
          {"temperature", Json(config_.temperature).dump()},
          {"timeout_seconds", std::to_string(config_.timeout_seconds)}};
}

}  // namespace polsum
