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

#include "polsum/cli.h"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "polsum/automaton.h"
#include "polsum/http_provider.h"
#include "polsum/llm_provider.h"
#include "polsum/model_count.h"
#include "polsum/policy.h"
#include "polsum/policy_analysis.h"
#include "polsum/report.h"
#include "polsum/request_set.h"
#include "polsum/sampler.h"
#include "polsum/status.h"
#include "polsum/summarizer.h"

namespace polsum {
namespace {

namespace fs = std::filesystem;

struct Options {
  std::vector<std::string> inputs;
  int samples = 1000;
  int bound = kDefaultCountBound;
  double threshold = 0.8;
  int attempts = 3;
  uint64_t seed = kDefaultSeed;
  std::string dim = std::string(kResourceDim);
  std::string provider = "mock";
  std::string provider_config;
  std::string out_path;
  std::string format = "json";
  bool include_extracted_regex = false;
  bool no_timestamp = false;
  bool strict_provider = false;
  size_t state_cap = kDefaultMaxStates;
  size_t cube_cap = kDefaultMaxCubes;
  int k = -1;
  std::string dot_path;
  std::string batch_dir;

  ReportFormat report_format() const {
    return format == "text" ? ReportFormat::kText : ReportFormat::kJson;
  }
  SetLimits limits() const { return {state_cap, cube_cap}; }
  SimplifierConfig simplifier() const {
    SimplifierConfig c;
    c.samples = samples;
    c.bound = bound;
    c.threshold = threshold;
    c.attempts = attempts;
    c.dimension = dim;
    c.seed = seed;
    c.include_extracted_regex_in_prompt = include_extracted_regex;
    c.strict_provider = strict_provider;
    c.limits = limits();
    return c;
  }
};

class Clock {
 public:
  Clock() : start_(std::chrono::steady_clock::now()) {}
  double ElapsedMs() const {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

absl::StatusOr<std::string> ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return absl::NotFoundError("cannot read '" + path + "': not found");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

absl::Status WriteFile(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) return absl::UnavailableError("cannot write '" + path + "'");
  out << content;
  out.close();
  if (!out) return absl::UnavailableError("cannot write '" + path + "'");
  return absl::OkStatus();
}

absl::StatusOr<PolicyDocument> LoadPolicy(const std::string& path) {
  POLSUM_ASSIGN_OR_RETURN(std::string text, ReadFile(path));
  absl::StatusOr<PolicyDocument> doc = ParsePolicy(text);
  if (!doc.ok()) {
    return absl::Status(doc.status().code(),
                        path + ": " + std::string(doc.status().message()));
  }
  return doc;
}

// Writes `report` to --out if given, else to `out`.
absl::Status Emit(const Options& opts, const std::string& report,
                  std::ostream& out) {
  if (opts.out_path.empty()) {
    out << report;
    return absl::OkStatus();
  }
  return WriteFile(opts.out_path, report);
}

std::optional<RunInfo> MakeRunInfo(const Options& opts, const Clock& clock,
                                   const StageTimings& timings) {
  if (opts.no_timestamp) return std::nullopt;
  return RunInfo{CurrentTimestamp(), clock.ElapsedMs(), timings};
}

absl::Status SummarizeOne(const Options& opts, const std::string& path,
                          const std::string& out_path, std::ostream& out) {
  Clock clock;
  POLSUM_ASSIGN_OR_RETURN(PolicyDocument doc, LoadPolicy(path));
  POLSUM_ASSIGN_OR_RETURN(std::unique_ptr<LlmProvider> provider,
                          MakeProvider(opts.provider, opts.provider_config));
  POLSUM_ASSIGN_OR_RETURN(
      SummarizationReport report,
      GenerateSummarization(doc, opts.simplifier(), *provider));
  std::string rendered =
      RenderSummaryReport(report, path, opts.report_format(),
                          MakeRunInfo(opts, clock, report.timings));
  if (out_path.empty()) {
    out << rendered;
    return absl::OkStatus();
  }
  POLSUM_RETURN_IF_ERROR(WriteFile(out_path, rendered));
  out << OneLineSummary(report) << "\n";
  return absl::OkStatus();
}

absl::Status RunSummarize(const Options& opts, std::ostream& out,
                          std::ostream& err) {
  if (opts.batch_dir.empty()) {
    if (opts.inputs.size() != 1) {
      return absl::InvalidArgumentError("summarize takes one policy file");
    }
    return SummarizeOne(opts, opts.inputs[0], opts.out_path, out);
  }
  if (opts.out_path.empty()) {
    return absl::InvalidArgumentError("--batch needs --out <directory>");
  }
  std::error_code ec;
  fs::create_directories(opts.out_path, ec);
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(opts.batch_dir, ec)) {
    if (entry.is_regular_file() && entry.path().extension() == ".json") {
      files.push_back(entry.path());
    }
  }
  if (ec) return absl::NotFoundError("cannot list '" + opts.batch_dir + "'");
  std::sort(files.begin(), files.end());
  absl::Status first_failure;
  for (const fs::path& file : files) {
    std::string ext = opts.report_format() == ReportFormat::kText ? ".txt"
                                                                  : ".json";
    fs::path target =
        fs::path(opts.out_path) / (file.stem().string() + ".report" + ext);
    out << file.filename().string() << ": ";
    absl::Status s = SummarizeOne(opts, file.string(), target.string(), out);
    if (!s.ok()) {
      out << "failed\n";
      err << "polsum: " << s.message() << "\n";
      if (first_failure.ok()) first_failure = s;
    }
  }
  return first_failure;
}

absl::Status RunCompare(const Options& opts, std::ostream& out) {
  if (opts.inputs.size() != 2) {
    return absl::InvalidArgumentError("compare takes two policy files");
  }
  POLSUM_ASSIGN_OR_RETURN(PolicyDocument p1, LoadPolicy(opts.inputs[0]));
  POLSUM_ASSIGN_OR_RETURN(PolicyDocument p2, LoadPolicy(opts.inputs[1]));
  POLSUM_ASSIGN_OR_RETURN(
      PermissivenessVerdict verdict,
      ComparePolicies(p1, p2, opts.k < 0 ? 3 : opts.k, opts.seed,
                      opts.limits()));
  return Emit(opts,
              RenderVerdictReport(verdict, opts.inputs[0], opts.inputs[1],
                                  opts.report_format()),
              out);
}

absl::Status RunDiff(const Options& opts, std::ostream& out) {
  if (opts.inputs.size() != 2) {
    return absl::InvalidArgumentError("diff takes two policy files");
  }
  Clock clock;
  POLSUM_ASSIGN_OR_RETURN(PolicyDocument p1, LoadPolicy(opts.inputs[0]));
  POLSUM_ASSIGN_OR_RETURN(PolicyDocument p2, LoadPolicy(opts.inputs[1]));
  POLSUM_ASSIGN_OR_RETURN(std::unique_ptr<LlmProvider> provider,
                          MakeProvider(opts.provider, opts.provider_config));
  POLSUM_ASSIGN_OR_RETURN(
      auto reports, SummarizeDifference(p1, p2, opts.simplifier(), *provider));
  std::string rendered = RenderDiffReport(
      reports.first, reports.second, opts.inputs[0], opts.inputs[1],
      opts.report_format(), MakeRunInfo(opts, clock, reports.first.timings));
  POLSUM_RETURN_IF_ERROR(Emit(opts, rendered, out));
  if (!opts.out_path.empty()) {
    out << "first minus second:  " << OneLineSummary(reports.first) << "\n";
    out << "second minus first:  " << OneLineSummary(reports.second) << "\n";
  }
  return absl::OkStatus();
}

absl::Status RunCount(const Options& opts, std::ostream& out) {
  if (opts.inputs.size() != 1) {
    return absl::InvalidArgumentError("count takes one policy file");
  }
  if (opts.bound < 0) return absl::InvalidArgumentError("bound must be >= 0");
  POLSUM_ASSIGN_OR_RETURN(PolicyDocument doc, LoadPolicy(opts.inputs[0]));
  POLSUM_ASSIGN_OR_RETURN(RequestSet allowed,
                          CompilePolicy(doc, opts.limits()));
  absl::StatusOr<Dfa> projected =
      Project(allowed, opts.dim, opts.limits().automaton());
  if (absl::IsNotFound(projected.status())) {
    return absl::InvalidArgumentError("unknown dimension '" + opts.dim + "'");
  }
  POLSUM_RETURN_IF_ERROR(projected.status());
  if (!opts.dot_path.empty()) {
    POLSUM_RETURN_IF_ERROR(WriteFile(opts.dot_path, ToDot(*projected)));
  }
  return Emit(opts,
              RenderCountReport(CountModels(*projected, opts.bound),
                                opts.inputs[0], opts.dim, opts.bound,
                                opts.report_format()),
              out);
}

absl::Status RunRequests(const Options& opts, std::ostream& out,
                         std::ostream& err) {
  if (opts.inputs.size() != 1) {
    return absl::InvalidArgumentError("requests takes one policy file");
  }
  const int k = opts.k < 0 ? 10 : opts.k;
  POLSUM_ASSIGN_OR_RETURN(PolicyDocument doc, LoadPolicy(opts.inputs[0]));
  POLSUM_ASSIGN_OR_RETURN(RequestSet allowed,
                          CompilePolicy(doc, opts.limits()));
  POLSUM_ASSIGN_OR_RETURN(
      RequestSet denied,
      SetDifference(RequestSet::Universe(allowed.schema()), allowed,
                    opts.limits()));
  POLSUM_ASSIGN_OR_RETURN(std::vector<AccessRequest> allows,
                          DrawRequests(allowed, k, DeriveSeed(opts.seed, 1)));
  POLSUM_ASSIGN_OR_RETURN(std::vector<AccessRequest> denies,
                          DrawRequests(denied, k, DeriveSeed(opts.seed, 2)));
  for (const AccessRequest& r : allows) {
    POLSUM_ASSIGN_OR_RETURN(Decision d, DecideRequest(doc, r, opts.limits()));
    if (d != Decision::kAllow) {
      return absl::InternalError("sampled allow failed verification");
    }
  }
  for (const AccessRequest& r : denies) {
    POLSUM_ASSIGN_OR_RETURN(Decision d, DecideRequest(doc, r, opts.limits()));
    if (d != Decision::kDeny) {
      return absl::InternalError("sampled deny failed verification");
    }
  }
  std::vector<std::string> warnings;
  if (static_cast<int>(allows.size()) < k) {
    warnings.push_back("only " + std::to_string(allows.size()) +
                       " allowed requests available");
  }
  if (static_cast<int>(denies.size()) < k) {
    warnings.push_back("only " + std::to_string(denies.size()) +
                       " denied requests available");
  }
  POLSUM_RETURN_IF_ERROR(Emit(
      opts,
      RenderRequestsReport(allows, denies, warnings, opts.inputs[0], k,
                           opts.report_format()),
      out));
  if (!warnings.empty()) {
    for (const std::string& w : warnings) err << "polsum: warning: " << w << "\n";
    return MakeError(ErrorKind::kInsufficientLanguage,
                     "not enough distinct requests");
  }
  return absl::OkStatus();
}

void AddCommonOptions(CLI::App* cmd, Options& opts) {
  cmd->add_option("--seed", opts.seed, "Random seed")->capture_default_str();
  cmd->add_option("--out", opts.out_path, "Write the report to this file");
  cmd->add_option("--format", opts.format, "Report format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  cmd->add_option("--state-cap", opts.state_cap, "Maximum DFA states")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--cube-cap", opts.cube_cap, "Maximum cubes per request set")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
}

void AddSummaryOptions(CLI::App* cmd, Options& opts) {
  cmd->add_option("-n,--samples", opts.samples, "Sample size")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("-b,--bound", opts.bound, "Counting bound")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  cmd->add_option("-t,--threshold", opts.threshold, "Similarity threshold")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  cmd->add_option("--attempts", opts.attempts, "LLM attempts")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--dim", opts.dim, "Dimension to summarize")
      ->capture_default_str();
  cmd->add_option("--provider", opts.provider, "LLM provider")
      ->check(CLI::IsMember({"mock", "http"}))
      ->capture_default_str();
  cmd->add_option("--provider-config", opts.provider_config,
                  "Provider configuration JSON file");
  cmd->add_flag("--include-extracted-regex-in-prompt",
                opts.include_extracted_regex,
                "Show the extracted regex to the LLM");
  cmd->add_flag("--no-timestamp", opts.no_timestamp,
                "Omit run_info (timestamp and timings) from reports");
  cmd->add_flag("--strict-provider", opts.strict_provider,
                "Fail with exit 3 when the provider fails");
}

}  // namespace

int ExitCodeFor(const absl::Status& status) {
  if (status.ok()) return kExitOk;
  std::optional<ErrorKind> kind = GetErrorKind(status);
  if (kind == ErrorKind::kStateBlowup || kind == ErrorKind::kCubeBlowup) {
    return kExitBlowup;
  }
  if (kind == ErrorKind::kProvider) return kExitProvider;
  if (kind == ErrorKind::kInsufficientLanguage) return kExitInsufficient;
  return kExitError;
}

absl::StatusOr<std::unique_ptr<LlmProvider>> MakeProvider(
    const std::string& kind, const std::string& config_path) {
  std::string text;
  if (!config_path.empty()) {
    POLSUM_ASSIGN_OR_RETURN(text, ReadFile(config_path));
  }
  if (kind == "mock") {
    MockProviderConfig config;
    if (!text.empty()) {
      POLSUM_ASSIGN_OR_RETURN(config, ParseMockProviderConfig(text));
    }
    int retries = config.retries;
    return std::unique_ptr<LlmProvider>(std::make_unique<RetryingProvider>(
        std::make_unique<MockProvider>(std::move(config)), retries));
  }
  if (kind == "http") {
    if (text.empty()) {
      return absl::InvalidArgumentError(
          "--provider http needs --provider-config");
    }
    POLSUM_ASSIGN_OR_RETURN(HttpProviderConfig config,
                            ParseHttpProviderConfig(text));
    int retries = config.retries;
    return std::unique_ptr<LlmProvider>(std::make_unique<RetryingProvider>(
        std::make_unique<HttpProvider>(std::move(config)), retries));
  }
  return absl::InvalidArgumentError("unknown provider '" + kind + "'");
}

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app("Summarize and compare access control policies.", "polsum");
  app.require_subcommand(1);
  Options opts;

  CLI::App* summarize =
      app.add_subcommand("summarize", "Summarize the requests a policy allows");
  summarize->add_option("policy", opts.inputs, "Policy JSON file");
  summarize->add_option("--batch", opts.batch_dir,
                        "Summarize every .json file in a directory");
  AddSummaryOptions(summarize, opts);
  AddCommonOptions(summarize, opts);

  CLI::App* compare =
      app.add_subcommand("compare", "Classify two policies by permissiveness");
  compare->add_option("policies", opts.inputs, "Two policy JSON files")
      ->expected(2)
      ->required();
  compare->add_option("-k", opts.k, "Witnesses per side (default 3)")
      ->check(CLI::NonNegativeNumber);
  AddCommonOptions(compare, opts);

  CLI::App* diff =
      app.add_subcommand("diff", "Summarize what each policy allows alone");
  diff->add_option("policies", opts.inputs, "Two policy JSON files")
      ->expected(2)
      ->required();
  AddSummaryOptions(diff, opts);
  AddCommonOptions(diff, opts);

  CLI::App* count =
      app.add_subcommand("count", "Count allowed values of one dimension");
  count->add_option("policy", opts.inputs, "Policy JSON file")->required();
  count->add_option("--dim", opts.dim, "Dimension")->capture_default_str();
  count->add_option("-b,--bound", opts.bound, "Maximum string length")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  count->add_option("--dot", opts.dot_path,
                    "Also write the projected DFA in Graphviz format");
  AddCommonOptions(count, opts);

  CLI::App* requests = app.add_subcommand(
      "requests", "Sample requests the policy allows and denies");
  requests->add_option("policy", opts.inputs, "Policy JSON file")->required();
  requests->add_option("-k", opts.k, "Requests per side (default 10)")
      ->check(CLI::NonNegativeNumber);
  AddCommonOptions(requests, opts);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitError;
  }

  absl::Status status;
  if (summarize->parsed()) {
    status = RunSummarize(opts, out, err);
  } else if (compare->parsed()) {
    status = RunCompare(opts, out);
  } else if (diff->parsed()) {
    status = RunDiff(opts, out);
  } else if (count->parsed()) {
    status = RunCount(opts, out);
  } else if (requests->parsed()) {
    status = RunRequests(opts, out, err);
  }
  if (!status.ok() &&
      !IsErrorKind(status, ErrorKind::kInsufficientLanguage)) {
    err << "polsum: " << status.message() << "\n";
  }
  return ExitCodeFor(status);
}

}  // namespace polsum
