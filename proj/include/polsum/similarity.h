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

#ifndef POLSUM_SIMILARITY_H_
#define POLSUM_SIMILARITY_H_

#include <string>

#include "absl/status/statusor.h"
#include "boost/multiprecision/cpp_int.hpp"
#include "polsum/automaton.h"
#include "polsum/model_count.h"
#include "polsum/regex.h"

namespace polsum {

using Rational = boost::multiprecision::cpp_rational;

// Jaccard index of two languages restricted to strings of length <= bound:
// |A ∩ B| / |A ∪ B|, kept exact.
struct Similarity {
  ModelCount intersection;
  ModelCount union_count;

  // 1 when both languages are empty within the bound.
  Rational value() const;
  double ToDouble() const;
  // "1", "0", or a 6-digit decimal such as "0.333333".
  std::string ToDecimalString() const;
};

absl::StatusOr<Similarity> QuantifySimilarity(
    const Dfa& a, const Dfa& b, int bound,
    const AutomatonLimits& limits = {});

absl::StatusOr<Similarity> QuantifySimilarity(
    const Regex& a, const Regex& b, int bound,
    const AutomatonLimits& limits = {});

}  // namespace polsum

#endif  // POLSUM_SIMILARITY_H_
