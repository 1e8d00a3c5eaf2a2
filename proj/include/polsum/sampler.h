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

#ifndef POLSUM_SAMPLER_H_
#define POLSUM_SAMPLER_H_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "polsum/regex.h"

namespace polsum {

inline constexpr uint64_t kDefaultSeed = 0x5EED0F5EEDULL;

struct SamplerConfig {
  // Probability of leaving a star loop before the first iteration.
  double threshold = 0.10;
  // Multiplier applied to the threshold after each star iteration.
  double growth = 1.01;
  uint64_t seed = kDefaultSeed;
  // Star loops stop once the string built so far is this long. The final
  // string can still be longer, since fixed parts are never cut.
  int max_length = 100;
};

absl::Status ValidateSamplerConfig(const SamplerConfig& config);

// Seed for the `stream`-th independent stream derived from `seed`.
uint64_t DeriveSeed(uint64_t seed, uint64_t stream);

// Uniform helpers with a fixed definition, so draws do not depend on the
// standard library's distribution implementations.
double UniformUnit(std::mt19937_64& rng);  // in [0, 1)
size_t UniformIndex(std::mt19937_64& rng, size_t n);  // in [0, n), n > 0

// Random-string generator for one regex. Nested unions are collapsed into a
// single set of children (duplicates and empty-language children removed),
// one of which is chosen uniformly. A star repeats its body while a uniform
// draw is at least the threshold, and the threshold grows after each
// repetition. Character classes yield a uniform member.
class RegexSampler {
 public:
  // EmptyLanguage if L(regex) is empty.
  static absl::StatusOr<RegexSampler> Create(const Regex& regex,
                                             const SamplerConfig& config);

  std::string Sample(std::mt19937_64& rng) const;

  struct Program;

 private:
  RegexSampler(std::shared_ptr<const Program> program, SamplerConfig config)
      : program_(std::move(program)), config_(config) {}

  std::shared_ptr<const Program> program_;
  SamplerConfig config_;
};

// One draw using `rng`.
absl::StatusOr<std::string> Sample(const Regex& regex,
                                   const SamplerConfig& config,
                                   std::mt19937_64& rng);

// Distinct strings from `n` draws seeded with config.seed, in order of first
// appearance.
absl::StatusOr<std::vector<std::string>> SampleN(const Regex& regex, int n,
                                                 const SamplerConfig& config);

}  // namespace polsum

#endif  // POLSUM_SAMPLER_H_
