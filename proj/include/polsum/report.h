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

#ifndef POLSUM_REPORT_H_
#define POLSUM_REPORT_H_

#include <optional>
#include <string>
#include <vector>

#include "polsum/model_count.h"
#include "polsum/policy_analysis.h"
#include "polsum/request_set.h"
#include "polsum/summarizer.h"

namespace polsum {

enum class ReportFormat { kJson, kText };

inline constexpr int kReportSchemaVersion = 1;

// Non-deterministic details. Reports leave them out when absent.
struct RunInfo {
  std::string timestamp;  // ISO 8601, UTC
  double wall_ms = 0;
  // Stage timings of the first (or only) summarization.
  StageTimings timings;
};

// Current UTC time as YYYY-MM-DDTHH:MM:SSZ.
std::string CurrentTimestamp();

// Full reports. See docs/report_schema.md for the JSON layout. JSON output
// ends with a newline.
std::string RenderSummaryReport(const SummarizationReport& report,
                                const std::string& policy_path,
                                ReportFormat format,
                                const std::optional<RunInfo>& run_info);

std::string RenderDiffReport(const SummarizationReport& first_minus_second,
                             const SummarizationReport& second_minus_first,
                             const std::string& policy1,
                             const std::string& policy2, ReportFormat format,
                             const std::optional<RunInfo>& run_info);

std::string RenderVerdictReport(const PermissivenessVerdict& verdict,
                                const std::string& policy1,
                                const std::string& policy2,
                                ReportFormat format);

std::string RenderCountReport(const ModelCount& count,
                              const std::string& policy_path,
                              const std::string& dimension, int bound,
                              ReportFormat format);

std::string RenderRequestsReport(const std::vector<AccessRequest>& allowed,
                                 const std::vector<AccessRequest>& denied,
                                 const std::vector<std::string>& warnings,
                                 const std::string& policy_path, int k,
                                 ReportFormat format);

// One line for standard output, e.g.
//   resource: (mp3s/A1/.*\.mp3)|(lyrics/A1/.*\.txt)  [llm, J=1]
std::string OneLineSummary(const SummarizationReport& report);

std::string FormatRequest(const AccessRequest& request);

}  // namespace polsum

#endif  // POLSUM_REPORT_H_
