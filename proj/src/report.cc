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

#include "polsum/report.h"

#include <ctime>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "polsum/policy_analysis.h"
#include "polsum/request_set.h"
#include "polsum/similarity.h"
#include "polsum/summarizer.h"

namespace polsum {
namespace {

using Json = nlohmann::ordered_json;

std::string ExactString(const Similarity& s) {
  Rational v = s.value();
  return numerator(v).str() + "/" + denominator(v).str();
}

Json SimilarityJson(const Similarity& s) {
  return {{"value", s.ToDecimalString()},
          {"exact", ExactString(s)},
          {"intersection_count", s.intersection.str()},
          {"union_count", s.union_count.str()}};
}

Json ConfigJson(const SimplifierConfig& config,
                const std::vector<std::pair<std::string, std::string>>&
                    provider) {
  Json p = Json::object();
  for (const auto& [key, value] : provider) p[key] = value;
  return {{"samples", config.samples},
          {"bound", config.bound},
          {"threshold", config.threshold},
          {"attempts", config.attempts},
          {"dimension", config.dimension},
          {"seed", config.seed},
          {"include_extracted_regex_in_prompt",
           config.include_extracted_regex_in_prompt},
          {"strict_provider", config.strict_provider},
          {"max_states", config.limits.max_states},
          {"max_cubes", config.limits.max_cubes},
          {"provider", p}};
}

Json SummaryJson(const SummarizationReport& r) {
  Json candidates = Json::array();
  for (const CandidateRecord& c : r.candidates) {
    Json jc = {{"attempt", c.attempt},
               {"status", std::string(CandidateStatusName(c.status))},
               {"text", c.text}};
    if (c.status == CandidateRecord::Status::kOk) {
      jc["normalized"] = c.normalized;
    }
    if (c.similarity.has_value()) {
      jc["similarity"] = SimilarityJson(*c.similarity);
    }
    if (!c.error.empty()) jc["error"] = c.error;
    candidates.push_back(std::move(jc));
  }
  Json chosen = {{"regex", r.chosen},
                 {"source", std::string(SourceName(r.source))},
                 {"attempt", r.chosen_attempt}};
  if (r.source != SummarizationReport::Source::kEmptyLanguage) {
    chosen["similarity"] = SimilarityJson(r.chosen_similarity);
  }
  return {{"dimension", r.dimension},
          {"empty_language",
           r.source == SummarizationReport::Source::kEmptyLanguage},
          {"extracted_regex", r.extracted_regex},
          {"samples",
           {{"requested", r.config.samples},
            {"distinct", r.samples.size()},
            {"values", r.samples}}},
          {"candidates", candidates},
          {"chosen", chosen},
          {"fallback", r.fallback},
          {"llm_calls", r.llm_calls}};
}

Json TimingsJson(const StageTimings& t) {
  return {{"compile_ms", t.compile_ms},
          {"extract_ms", t.extract_ms},
          {"sample_ms", t.sample_ms},
          {"llm_ms", t.llm_ms},
          {"similarity_ms", t.similarity_ms}};
}

Json RunInfoJson(const RunInfo& info) {
  return {{"timestamp", info.timestamp},
          {"wall_ms", info.wall_ms},
          {"timings", TimingsJson(info.timings)}};
}

Json RequestJson(const AccessRequest& r) {
  Json context = Json::object();
  for (const auto& [key, value] : r.context) context[key] = value;
  return {{"principal", r.principal},
          {"action", r.action},
          {"resource", r.resource},
          {"context", context}};
}

std::string SummaryText(const SummarizationReport& r, std::string_view title) {
  std::ostringstream out;
  out << title << "\n";
  out << "  dimension:       " << r.dimension << "\n";
  out << "  extracted regex: " << r.extracted_regex << "\n";
  if (r.source != SummarizationReport::Source::kEmptyLanguage) {
    out << "  samples:         " << r.samples.size() << " distinct of "
        << r.config.samples << " draws\n";
  }
  for (const CandidateRecord& c : r.candidates) {
    out << "  attempt " << c.attempt << ":       "
        << CandidateStatusName(c.status);
    if (!c.text.empty()) out << "  " << c.text;
    if (c.similarity.has_value()) {
      out << "  J=" << c.similarity->ToDecimalString() << " ("
          << ExactString(*c.similarity) << ")";
    }
    if (!c.error.empty()) out << "  [" << c.error << "]";
    out << "\n";
  }
  out << "  chosen:          " << r.chosen << " (" << SourceName(r.source)
      << ")\n";
  if (r.source != SummarizationReport::Source::kEmptyLanguage) {
    out << "  similarity:      " << r.chosen_similarity.ToDecimalString()
        << " = " << r.chosen_similarity.intersection.str() << " / "
        << r.chosen_similarity.union_count.str() << "\n";
  }
  out << "  fallback:        " << (r.fallback ? "yes" : "no") << "\n";
  out << "  llm calls:       " << r.llm_calls << "\n";
  return out.str();
}

std::string RunInfoText(const RunInfo& info) {
  std::ostringstream out;
  out << "run: " << info.timestamp << ", " << info.wall_ms << " ms\n";
  return out.str();
}

}  // namespace

std::string CurrentTimestamp() {
  std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string RenderSummaryReport(const SummarizationReport& report,
                                const std::string& policy_path,
                                ReportFormat format,
                                const std::optional<RunInfo>& run_info) {
  if (format == ReportFormat::kText) {
    std::string text = SummaryText(report, "summary of " + policy_path);
    if (run_info.has_value()) text += RunInfoText(*run_info);
    return text;
  }
  Json j = {{"schema_version", kReportSchemaVersion},
            {"command", "summarize"},
            {"policy", policy_path}};
  Json summary = SummaryJson(report);
  for (auto& [key, value] : summary.items()) j[key] = value;
  j["config"] = ConfigJson(report.config, report.provider);
  if (run_info.has_value()) j["run_info"] = RunInfoJson(*run_info);
  return j.dump(2) + "\n";
}

std::string RenderDiffReport(const SummarizationReport& first_minus_second,
                             const SummarizationReport& second_minus_first,
                             const std::string& policy1,
                             const std::string& policy2, ReportFormat format,
                             const std::optional<RunInfo>& run_info) {
  if (format == ReportFormat::kText) {
    std::string text =
        SummaryText(first_minus_second,
                    "allowed by " + policy1 + " but not " + policy2) +
        SummaryText(second_minus_first,
                    "allowed by " + policy2 + " but not " + policy1);
    if (run_info.has_value()) text += RunInfoText(*run_info);
    return text;
  }
  Json j = {{"schema_version", kReportSchemaVersion},
            {"command", "diff"},
            {"policies", {policy1, policy2}},
            {"first_minus_second", SummaryJson(first_minus_second)},
            {"second_minus_first", SummaryJson(second_minus_first)},
            {"config", ConfigJson(first_minus_second.config,
                                  first_minus_second.provider)}};
  if (run_info.has_value()) j["run_info"] = RunInfoJson(*run_info);
  return j.dump(2) + "\n";
}

std::string RenderVerdictReport(const PermissivenessVerdict& verdict,
                                const std::string& policy1,
                                const std::string& policy2,
                                ReportFormat format) {
  if (format == ReportFormat::kText) {
    std::ostringstream out;
    out << VerdictName(verdict.kind) << "\n";
    for (const AccessRequest& r : verdict.first_only) {
      out << "  only " << policy1 << " allows: " << FormatRequest(r) << "\n";
    }
    for (const AccessRequest& r : verdict.second_only) {
      out << "  only " << policy2 << " allows: " << FormatRequest(r) << "\n";
    }
    return out.str();
  }
  Json first = Json::array();
  Json second = Json::array();
  for (const AccessRequest& r : verdict.first_only) {
    first.push_back(RequestJson(r));
  }
  for (const AccessRequest& r : verdict.second_only) {
    second.push_back(RequestJson(r));
  }
  Json j = {{"schema_version", kReportSchemaVersion},
            {"command", "compare"},
            {"policies", {policy1, policy2}},
            {"verdict", std::string(VerdictName(verdict.kind))},
            {"witnesses", {{"first_only", first}, {"second_only", second}}}};
  return j.dump(2) + "\n";
}

std::string RenderCountReport(const ModelCount& count,
                              const std::string& policy_path,
                              const std::string& dimension, int bound,
                              ReportFormat format) {
  if (format == ReportFormat::kText) return count.str() + "\n";
  Json j = {{"schema_version", kReportSchemaVersion},
            {"command", "count"},
            {"policy", policy_path},
            {"dimension", dimension},
            {"bound", bound},
            {"count", count.str()}};
  return j.dump(2) + "\n";
}

std::string RenderRequestsReport(const std::vector<AccessRequest>& allowed,
                                 const std::vector<AccessRequest>& denied,
                                 const std::vector<std::string>& warnings,
                                 const std::string& policy_path, int k,
                                 ReportFormat format) {
  if (format == ReportFormat::kText) {
    std::ostringstream out;
    for (const AccessRequest& r : allowed) {
      out << "Allow " << FormatRequest(r) << "\n";
    }
    for (const AccessRequest& r : denied) {
      out << "Deny  " << FormatRequest(r) << "\n";
    }
    return out.str();
  }
  Json a = Json::array();
  Json d = Json::array();
  for (const AccessRequest& r : allowed) {
    Json jr = RequestJson(r);
    jr["decision"] = "Allow";
    a.push_back(std::move(jr));
  }
  for (const AccessRequest& r : denied) {
    Json jr = RequestJson(r);
    jr["decision"] = "Deny";
    d.push_back(std::move(jr));
  }
  Json j = {{"schema_version", kReportSchemaVersion},
            {"command", "requests"},
            {"policy", policy_path},
            {"k", k},
            {"allowed", a},
            {"denied", d},
            {"warnings", warnings}};
  return j.dump(2) + "\n";
}

std::string OneLineSummary(const SummarizationReport& report) {
  std::string line = report.dimension + ": " + report.chosen + "  [" +
                     std::string(SourceName(report.source));
  if (report.source != SummarizationReport::Source::kEmptyLanguage) {
    line += ", J=" + report.chosen_similarity.ToDecimalString();
  }
  return line + "]";
}

std::string FormatRequest(const AccessRequest& request) {
  return RequestJson(request).dump();
}

}  // namespace polsum
