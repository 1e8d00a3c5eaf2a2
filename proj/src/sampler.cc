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

#include "polsum/sampler.h"

#include <cstddef>
#include <cstdint>
#include <deque>
#include <memory>
#include <random>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "polsum/alphabet.h"
#include "polsum/regex.h"
#include "polsum/status.h"

namespace polsum {

struct RegexSampler::Program {
  enum class Kind { kEpsilon, kChars, kConcat, kUnion, kStar };
  struct Op {
    Kind kind;
    CharSet chars;
    std::vector<int> children;
  };
  std::vector<Op> ops;
  int root = -1;
};

namespace {

using Program = RegexSampler::Program;
using Kind = Program::Kind;

constexpr int kDead = -1;

struct RegexHash {
  size_t operator()(const Regex& r) const { return r.hash(); }
};

class Compiler {
 public:
  explicit Compiler(Program& program) : program_(program) {}

  // Index of the op sampling `regex`, or kDead if its language is empty.
  int Compile(const Regex& regex) {
    auto it = memo_.find(regex);
    if (it != memo_.end()) return it->second;
    int result = CompileUncached(regex);
    memo_.emplace(regex, result);
    return result;
  }

 private:
  int Add(Program::Op op) {
    program_.ops.push_back(std::move(op));
    return static_cast<int>(program_.ops.size()) - 1;
  }

  int Epsilon() {
    if (epsilon_ == kDead) epsilon_ = Add({Kind::kEpsilon, {}, {}});
    return epsilon_;
  }

  int CompileUncached(const Regex& regex) {
    switch (regex.kind()) {
      case Regex::Kind::kEmpty:
        return kDead;
      case Regex::Kind::kEpsilon:
        return Epsilon();
      case Regex::Kind::kCharClass:
        return Add({Kind::kChars, regex.chars(), {}});
      case Regex::Kind::kConcat: {
        int left = Compile(regex.left());
        if (left == kDead) return kDead;
        int right = Compile(regex.right());
        if (right == kDead) return kDead;
        std::vector<int> parts;
        for (int part : {left, right}) {
          const Program::Op& op = program_.ops[part];
          if (op.kind == Kind::kConcat) {
            parts.insert(parts.end(), op.children.begin(), op.children.end());
          } else if (op.kind != Kind::kEpsilon) {
            parts.push_back(part);
          }
        }
        if (parts.empty()) return Epsilon();
        if (parts.size() == 1) return parts[0];
        return Add({Kind::kConcat, {}, std::move(parts)});
      }
      case Regex::Kind::kUnion: {
        // Gather every non-union descendant reachable through unions.
        std::vector<int> children;
        std::unordered_set<Regex, RegexHash> seen;
        std::deque<Regex> queue = {regex.left(), regex.right()};
        while (!queue.empty()) {
          Regex r = std::move(queue.front());
          queue.pop_front();
          if (r.kind() == Regex::Kind::kUnion) {
            queue.push_back(r.left());
            queue.push_back(r.right());
          } else if (seen.insert(r).second) {
            int child = Compile(r);
            if (child != kDead) children.push_back(child);
          }
        }
        if (children.empty()) return kDead;
        if (children.size() == 1) return children[0];
        return Add({Kind::kUnion, {}, std::move(children)});
      }
      case Regex::Kind::kStar: {
        int body = Compile(regex.inner());
        if (body == kDead || program_.ops[body].kind == Kind::kEpsilon) {
          return Epsilon();
        }
        return Add({Kind::kStar, {}, {body}});
      }
    }
    return kDead;
  }

  Program& program_;
  std::unordered_map<Regex, int, RegexHash> memo_;
  int epsilon_ = kDead;
};

void Emit(const Program& program, int index, const SamplerConfig& config,
          std::mt19937_64& rng, std::string& out) {
  const Program::Op& op = program.ops[index];
  switch (op.kind) {
    case Kind::kEpsilon:
      return;
    case Kind::kChars:
      out.push_back(op.chars.Nth(UniformIndex(rng, op.chars.size())));
      return;
    case Kind::kConcat:
      for (int child : op.children) Emit(program, child, config, rng, out);
      return;
    case Kind::kUnion:
      Emit(program, op.children[UniformIndex(rng, op.children.size())], config,
           rng, out);
      return;
    case Kind::kStar: {
      double threshold = config.threshold;
      while (out.size() < static_cast<size_t>(config.max_length) &&
             UniformUnit(rng) >= threshold) {
        Emit(program, op.children[0], config, rng, out);
        threshold *= config.growth;
      }
      return;
    }
  }
}

}  // namespace

absl::Status ValidateSamplerConfig(const SamplerConfig& config) {
  if (!(config.threshold > 0 && config.threshold <= 1)) {
    return absl::InvalidArgumentError("sampler threshold must be in (0, 1]");
  }
  if (!(config.growth > 1)) {
    return absl::InvalidArgumentError("sampler growth ratio must exceed 1");
  }
  if (config.max_length < 1) {
    return absl::InvalidArgumentError("sampler max length must be at least 1");
  }
  return absl::OkStatus();
}

uint64_t DeriveSeed(uint64_t seed, uint64_t stream) {
  // splitmix64 finalizer over the combined value.
  uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double UniformUnit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

size_t UniformIndex(std::mt19937_64& rng, size_t n) {
  const uint64_t range = static_cast<uint64_t>(n);
  const uint64_t limit = UINT64_MAX - UINT64_MAX % range;
  uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return static_cast<size_t>(x % range);
}

absl::StatusOr<RegexSampler> RegexSampler::Create(const Regex& regex,
                                                  const SamplerConfig& config) {
  POLSUM_RETURN_IF_ERROR(ValidateSamplerConfig(config));
  auto program = std::make_shared<Program>();
  Compiler compiler(*program);
  program->root = compiler.Compile(regex);
  if (program->root == kDead) {
    return MakeError(ErrorKind::kEmptyLanguage,
                     "cannot sample from a regex with an empty language");
  }
  return RegexSampler(std::move(program), config);
}

std::string RegexSampler::Sample(std::mt19937_64& rng) const {
  std::string out;
  Emit(*program_, program_->root, config_, rng, out);
  return out;
}

absl::StatusOr<std::string> Sample(const Regex& regex,
                                   const SamplerConfig& config,
                                   std::mt19937_64& rng) {
  POLSUM_ASSIGN_OR_RETURN(RegexSampler sampler,
                          RegexSampler::Create(regex, config));
  return sampler.Sample(rng);
}

absl::StatusOr<std::vector<std::string>> SampleN(const Regex& regex, int n,
                                                 const SamplerConfig& config) {
  if (n < 1) return absl::InvalidArgumentError("sample count must be >= 1");
  POLSUM_ASSIGN_OR_RETURN(RegexSampler sampler,
                          RegexSampler::Create(regex, config));
  std::mt19937_64 rng(config.seed);
  std::vector<std::string> out;
  std::unordered_set<std::string> seen;
  for (int i = 0; i < n; ++i) {
    std::string s = sampler.Sample(rng);
    if (seen.insert(s).second) out.push_back(std::move(s));
  }
  return out;
}

}  // namespace polsum
