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

// End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
// exits non-zero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "absl/status/status.h"
#include "boost/math/distributions/chi_squared.hpp"
#include "json.hpp"
#include "polsum/automaton.h"
#include "polsum/cli.h"
#include "polsum/llm_provider.h"
#include "polsum/model_count.h"
#include "polsum/policy.h"
#include "polsum/regex.h"
#include "polsum/regex_extraction.h"
#include "polsum/report.h"
#include "polsum/request_set.h"
#include "polsum/sampler.h"
#include "polsum/similarity.h"
#include "polsum/status.h"
#include "polsum/summarizer.h"
#include "testing/generators.h"
#include "testing/helpers.h"
#include "testing/oracles.h"

namespace polsum {
namespace {

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;
using testing::Rng;

#define ACCEPT_EXPECT(cond, msg)                         \
  do {                                                   \
    if (!(cond)) return absl::FailedPreconditionError(msg); \
  } while (false)

constexpr char kMusicRegex[] = "(mp3s/A1/.*\\.mp3)|(lyrics/A1/.*\\.txt)";

std::string Policy(const std::string& name) {
  return testing::TestdataPath("policies/" + name);
}

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult Cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = RunCli(args, out, err);
  return {code, out.str(), err.str()};
}

absl::StatusOr<Json> ParseJson(const std::string& text) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) return absl::InternalError("output is not JSON");
  return j;
}

absl::StatusOr<PolicyDocument> Load(const std::string& name) {
  return ParsePolicy(testing::ReadTestdata("policies/" + name));
}

// 1. The motivating example reaches J = 1 with the candidate chosen.
absl::Status MotivatingExample() {
  CliResult r = Cli({"summarize", Policy("music_bucket.json"),
                     "--provider-config",
                     testing::TestdataPath("mock/music_summary.json"),
                     "--no-timestamp"});
  ACCEPT_EXPECT(r.code == kExitOk, "summarize failed: " + r.err);
  POLSUM_ASSIGN_OR_RETURN(Json j, ParseJson(r.out));
  const Json& chosen = j["chosen"];
  ACCEPT_EXPECT(chosen["source"] == "llm", "candidate was not chosen");
  ACCEPT_EXPECT(chosen["regex"] == kMusicRegex, "unexpected chosen regex");
  ACCEPT_EXPECT(chosen["similarity"]["value"] == "1", "J is not 1");
  ACCEPT_EXPECT(chosen["similarity"]["intersection_count"] ==
                    chosen["similarity"]["union_count"],
                "intersection and union counts differ");

  // Same check on exact rationals through the library.
  POLSUM_ASSIGN_OR_RETURN(PolicyDocument doc, Load("music_bucket.json"));
  MockProviderConfig mock_config;
  mock_config.responses = {kMusicRegex};
  MockProvider mock(mock_config);
  POLSUM_ASSIGN_OR_RETURN(SummarizationReport report,
                          GenerateSummarization(doc, {}, mock));
  ACCEPT_EXPECT(report.chosen_similarity.value() == Rational(1),
                "rational J is not exactly 1");
  ACCEPT_EXPECT(!report.fallback, "fallback flag set");
  return absl::OkStatus();
}

// 2. Allow-then-deny-everything policy.
absl::Status AllowNothing() {
  CliResult r = Cli({"summarize", Policy("deny_all.json"), "--no-timestamp"});
  ACCEPT_EXPECT(r.code == kExitOk, "summarize failed: " + r.err);
  POLSUM_ASSIGN_OR_RETURN(Json j, ParseJson(r.out));
  ACCEPT_EXPECT(j["chosen"]["regex"] == std::string(kEmptySetToken),
                "chosen is not the empty set");
  ACCEPT_EXPECT(j["llm_calls"] == 0, "the provider was called");

  r = Cli({"count", Policy("deny_all.json"), "--format", "text"});
  ACCEPT_EXPECT(r.code == kExitOk && r.out == "0\n", "count is not 0");

  r = Cli({"compare", Policy("deny_all.json"), Policy("music_bucket.json")});
  ACCEPT_EXPECT(r.code == kExitOk, "compare failed: " + r.err);
  POLSUM_ASSIGN_OR_RETURN(j, ParseJson(r.out));
  ACCEPT_EXPECT(j["verdict"] == "SecondMorePermissive",
                "verdict is " + j["verdict"].dump());
  return absl::OkStatus();
}

// 3. Bounded counts equal exhaustive enumeration.
absl::Status CountingOracle() {
  Rng rng(3003);
  for (int i = 0; i < 200; ++i) {
    std::string chars =
        testing::RandomSubAlphabet(rng, testing::RandomInt(rng, 1, 3));
    int bound = testing::RandomInt(rng, 0, 6);
    Dfa dfa;
    std::function<bool(std::string_view)> oracle;
    std::string label;
    if (i % 2 == 0) {
      std::string glob = testing::RandomGlob(rng, chars, 5);
      POLSUM_ASSIGN_OR_RETURN(WildcardPattern p,
                              WildcardPattern::FromGlob(glob));
      POLSUM_ASSIGN_OR_RETURN(dfa, DfaFromPattern(p));
      oracle = [glob](std::string_view s) {
        return testing::GlobMatch(glob, s);
      };
      label = "pattern " + glob;
    } else {
      Regex r = testing::RandomRegex(rng, chars, 4);
      std::string printed = PrintRegex(r);
      POLSUM_ASSIGN_OR_RETURN(dfa, DfaFromRegex(r));
      oracle = [printed](std::string_view s) {
        return testing::StdRegexMatch(printed, s);
      };
      label = "regex " + printed;
    }
    ModelCount expected = testing::CountByEnumeration(oracle, chars, bound);
    ACCEPT_EXPECT(CountModels(dfa, bound) == expected,
                  label + " bound " + std::to_string(bound));
  }
  return absl::OkStatus();
}

// 4. Extracted regexes denote the DFA they came from.
absl::Status ExtractionRoundTrip() {
  auto round_trips = [](const Dfa& d) -> absl::StatusOr<bool> {
    POLSUM_ASSIGN_OR_RETURN(Dfa back, DfaFromRegex(ExtractRegex(d)));
    return Equivalent(d, back);
  };
  // Fully random transition tables give regexes whose size is exponential
  // in the state count (tens of megabytes at 30 states), so transitions are
  // sparse here, as in automata compiled from policies.
  constexpr double kEdgeProbability = 0.7;
  Rng rng(4004);
  for (int i = 0; i < 200; ++i) {
    std::string chars =
        testing::RandomSubAlphabet(rng, testing::RandomInt(rng, 1, 3));
    Dfa d = testing::RandomDfa(rng, testing::RandomInt(rng, 1, 30), chars,
                               kEdgeProbability);
    POLSUM_ASSIGN_OR_RETURN(bool ok, round_trips(d));
    ACCEPT_EXPECT(ok, "random DFA " + std::to_string(i));
  }
  for (const char* name : testing::kCorpus) {
    POLSUM_ASSIGN_OR_RETURN(PolicyDocument doc, Load(name));
    POLSUM_ASSIGN_OR_RETURN(RequestSet set, CompilePolicy(doc));
    for (const std::string& dim : set.schema().dims()) {
      POLSUM_ASSIGN_OR_RETURN(Dfa d, Project(set, dim));
      POLSUM_ASSIGN_OR_RETURN(bool ok, round_trips(d));
      ACCEPT_EXPECT(ok, std::string(name) + " dimension " + dim);
    }
  }
  return absl::OkStatus();
}

// 5. Compiled request sets agree with a statement-by-statement evaluator.
absl::Status CompilationOracle() {
  Rng rng(5005);
  for (int i = 0; i < 100; ++i) {
    testing::PolicyShape shape;
    shape.chars = testing::RandomSubAlphabet(rng, 2);
    PolicyDocument doc = testing::RandomPolicy(rng, shape);
    POLSUM_ASSIGN_OR_RETURN(RequestSet set, CompilePolicy(doc));
    std::string probe = shape.chars + testing::OtherSymbol(shape.chars);
    std::vector<std::string> fixed = testing::AllStrings(probe, 2);
    std::vector<std::string> keyed = testing::AllStrings(probe, 1);
    AccessRequest r;
    for (const auto& p : fixed) {
      r.principal = p;
      for (const auto& a : fixed) {
        r.action = a;
        for (const auto& res : fixed) {
          r.resource = res;
          for (const auto& k0 : keyed) {
            for (const auto& k1 : keyed) {
              r.context = {{"k0", k0}, {"k1", k1}};
              POLSUM_ASSIGN_OR_RETURN(bool in, Contains(set, r));
              ACCEPT_EXPECT(in == testing::ReferenceAllows(doc, r),
                            "policy " + std::to_string(i) + " request " +
                                FormatRequest(r));
            }
          }
        }
      }
    }
  }
  return absl::OkStatus();
}

// 6. Samples are members; union children are picked uniformly.
absl::Status SamplerSoundnessAndUniformity() {
  Rng rng(6006);
  std::mt19937_64 draw(6007);
  int checked = 0;
  std::vector<Regex> corpus = {testing::Re(kMusicRegex),
                               testing::Re("logs/.*|backups/[0-9]+\\.tar")};
  while (corpus.size() < 100) {
    std::string chars = testing::RandomSubAlphabet(rng, 3);
    Regex r = testing::RandomRegex(rng, chars, 5);
    POLSUM_ASSIGN_OR_RETURN(Dfa d, DfaFromRegex(r));
    if (!IsEmpty(d)) corpus.push_back(r);
  }
  for (const Regex& r : corpus) {
    POLSUM_ASSIGN_OR_RETURN(Dfa d, DfaFromRegex(r));
    POLSUM_ASSIGN_OR_RETURN(RegexSampler sampler, RegexSampler::Create(r, {}));
    for (int i = 0; i < 1000; ++i) {
      std::string s = sampler.Sample(draw);
      POLSUM_ASSIGN_OR_RETURN(bool in, Accepts(d, s));
      ACCEPT_EXPECT(in, "'" + s + "' not in " + PrintRegex(r));
      ++checked;
    }
  }
  ACCEPT_EXPECT(checked == 100000, "wrong sample total");

  // Each union has literal children, so every outcome names its child.
  const std::vector<std::vector<std::string>> unions = {
      {"a", "b"},
      {"a", "b", "c"},
      {"ab", "cd", "ef", "gh"},
      {"x", "yy", "zzz", "w", "v"},
      {"mp3", "txt", "wav", "flac", "ogg", "m4a"},
  };
  const int n = 30000;
  for (size_t u = 0; u < unions.size(); ++u) {
    const std::vector<std::string>& children = unions[u];
    // Nest as a | (b | (c | ...)) so flattening is exercised.
    Regex r = Regex::Literal(children.back());
    for (size_t i = children.size() - 1; i-- > 0;) {
      r = Regex::Union(Regex::Literal(children[i]), r);
    }
    POLSUM_ASSIGN_OR_RETURN(RegexSampler sampler, RegexSampler::Create(r, {}));
    std::mt19937_64 urng(7000 + u);
    std::map<std::string, double> counts;
    for (int i = 0; i < n; ++i) counts[sampler.Sample(urng)] += 1;
    ACCEPT_EXPECT(counts.size() == children.size(), "unexpected outcome");
    double expected = static_cast<double>(n) / children.size();
    double stat = 0;
    for (const std::string& c : children) {
      double d = counts[c] - expected;
      stat += d * d / expected;
    }
    boost::math::chi_squared dist(static_cast<double>(children.size() - 1));
    double critical = boost::math::quantile(dist, 0.99);
    ACCEPT_EXPECT(stat < critical, "union " + std::to_string(u) +
                                       " chi-square " + std::to_string(stat));
  }
  return absl::OkStatus();
}

// 7. Jaccard index identities.
absl::Status SimilarityAlgebra() {
  auto j = [](std::string_view a, std::string_view b,
              int bound) -> absl::StatusOr<Similarity> {
    return QuantifySimilarity(testing::Re(a), testing::Re(b), bound);
  };
  POLSUM_ASSIGN_OR_RETURN(Similarity self, j(kMusicRegex, kMusicRegex, 100));
  ACCEPT_EXPECT(self.value() == 1, "J(R, R) != 1");
  POLSUM_ASSIGN_OR_RETURN(Similarity third, j("a|b", "b|c", 1));
  ACCEPT_EXPECT(third.value() == Rational(1, 3), "J(a|b, b|c) != 1/3");
  POLSUM_ASSIGN_OR_RETURN(
      Similarity none,
      QuantifySimilarity(Dfa::EmptyLanguage(), Dfa::EmptyLanguage(), 10));
  ACCEPT_EXPECT(none.union_count == 0 && none.value() == 1, "0/0 != 1");

  Rng rng(7007);
  for (int i = 0; i < 100; ++i) {
    std::string chars = testing::RandomSubAlphabet(rng, 3);
    Regex a = testing::RandomRegex(rng, chars, 4);
    Regex b = testing::RandomRegex(rng, chars, 4);
    int bound = testing::RandomInt(rng, 0, 20);
    POLSUM_ASSIGN_OR_RETURN(Similarity ab, QuantifySimilarity(a, b, bound));
    POLSUM_ASSIGN_OR_RETURN(Similarity ba, QuantifySimilarity(b, a, bound));
    POLSUM_ASSIGN_OR_RETURN(Similarity aa, QuantifySimilarity(a, a, bound));
    ACCEPT_EXPECT(ab.value() == ba.value(), "J not symmetric");
    ACCEPT_EXPECT(aa.value() == 1, "J(R, R) != 1 for " + PrintRegex(a));
  }
  return absl::OkStatus();
}

// 8. Fallback to the extracted regex, and exact echo candidates.
absl::Status FallbackBehavior() {
  POLSUM_ASSIGN_OR_RETURN(PolicyDocument right, Load("music_bucket.json"));
  MockProviderConfig disjoint;
  disjoint.responses = {"zzz*"};
  MockProvider disjoint_mock(disjoint);
  POLSUM_ASSIGN_OR_RETURN(SummarizationReport r,
                          GenerateSummarization(right, {}, disjoint_mock));
  ACCEPT_EXPECT(r.fallback, "fallback flag not set");
  ACCEPT_EXPECT(r.chosen == r.extracted_regex,
                "chosen is not the extracted regex");

  for (const char* name : testing::kCorpus) {
    POLSUM_ASSIGN_OR_RETURN(PolicyDocument doc, Load(name));
    MockProvider echo;
    SimplifierConfig config;
    config.attempts = 1;
    POLSUM_ASSIGN_OR_RETURN(r, GenerateSummarization(doc, config, echo));
    if (r.source == SummarizationReport::Source::kEmptyLanguage) {
      // Nothing is allowed, so there is nothing to echo.
      ACCEPT_EXPECT(r.llm_calls == 0, std::string(name) + " called provider");
      continue;
    }
    ACCEPT_EXPECT(r.source == SummarizationReport::Source::kCandidate,
                  std::string(name) + ": echo not chosen");
    ACCEPT_EXPECT(r.chosen == r.extracted_regex,
                  std::string(name) + ": chosen differs from echo");
    ACCEPT_EXPECT(r.chosen_similarity.value() == 1,
                  std::string(name) + ": J != 1");
  }
  return absl::OkStatus();
}

// 9. Counts of the universal and single-character resource languages.
absl::Status GeometricCounts() {
  CliResult r = Cli({"count", Policy("any_resource.json"), "-b", "2",
                     "--format", "text"});
  ACCEPT_EXPECT(r.code == kExitOk && r.out == "9121\n",
                "\"*\" bound 2 gave " + r.out);
  r = Cli({"count", Policy("single_char_resource.json"), "-b", "100",
           "--format", "text"});
  ACCEPT_EXPECT(r.code == kExitOk && r.out == "95\n",
                "\"?\" bound 100 gave " + r.out);
  return absl::OkStatus();
}

// 10. Identical seeds give byte-identical reports.
absl::Status Determinism() {
  fs::path dir = fs::temp_directory_path() /
                 ("polsum_acceptance_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  auto run = [&](const std::string& out) {
    return Cli({"summarize", Policy("music_bucket.json"), "--seed", "7",
                "--provider", "mock", "--out", (dir / out).string()});
  };
  auto read = [&](const std::string& out) {
    std::ifstream in(dir / out);
    std::ostringstream buf;
    buf << in.rdbuf();
    Json j = Json::parse(buf.str());
    j.erase("run_info");  // timestamp and wall-clock timings
    return j.dump(2);
  };
  CliResult a = run("a.json");
  CliResult b = run("b.json");
  std::string ja = read("a.json"), jb = read("b.json");
  CliResult c = Cli({"summarize", Policy("music_bucket.json"), "--seed", "7",
                     "--provider", "mock", "--no-timestamp"});
  CliResult d = Cli({"summarize", Policy("music_bucket.json"), "--seed", "7",
                     "--provider", "mock", "--no-timestamp"});
  fs::remove_all(dir);
  ACCEPT_EXPECT(a.code == kExitOk && b.code == kExitOk, "summarize failed");
  ACCEPT_EXPECT(ja == jb, "reports differ");
  ACCEPT_EXPECT(c.code == kExitOk && c.out == d.out,
                "--no-timestamp reports differ");
  return absl::OkStatus();
}

struct Criterion {
  int id;
  const char* name;
  double limit_ms;  // 0 = no time limit
  absl::Status (*run)();
};

constexpr Criterion kCriteria[] = {
    {1, "motivating example", 10'000, MotivatingExample},
    {2, "allow-nothing policy", 1'000, AllowNothing},
    {3, "counting oracle", 60'000, CountingOracle},
    {4, "extraction round trip", 120'000, ExtractionRoundTrip},
    {5, "compilation oracle", 120'000, CompilationOracle},
    {6, "sampler soundness and uniformity", 0, SamplerSoundnessAndUniformity},
    {7, "similarity algebra", 0, SimilarityAlgebra},
    {8, "fallback behavior", 0, FallbackBehavior},
    {9, "geometric counts", 0, GeometricCounts},
    {10, "determinism", 0, Determinism},
};

}  // namespace
}  // namespace polsum

// Optional arguments select criteria by number; by default all run.
int main(int argc, char** argv) {
  std::vector<int> selected;
  for (int i = 1; i < argc; ++i) selected.push_back(std::atoi(argv[i]));
  int failures = 0;
  for (const polsum::Criterion& c : polsum::kCriteria) {
    if (!selected.empty() &&
        std::find(selected.begin(), selected.end(), c.id) == selected.end()) {
      continue;
    }
    auto start = std::chrono::steady_clock::now();
    absl::Status status = c.run();
    double ms = std::chrono::duration<double, std::milli>(
                    std::chrono::steady_clock::now() - start)
                    .count();
    std::string detail;
    if (!status.ok()) {
      detail = std::string(status.message());
    } else if (c.limit_ms > 0 && ms > c.limit_ms) {
      detail = "over the " + std::to_string(static_cast<int>(c.limit_ms)) +
               " ms limit";
    }
    bool pass = detail.empty();
    if (!pass) ++failures;
    std::printf("%s [%d] %s (%.0f ms)%s%s\n", pass ? "PASS" : "FAIL", c.id,
                c.name, ms, pass ? "" : ": ", detail.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
