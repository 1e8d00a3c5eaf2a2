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

#include "polsum/similarity.h"

#include <cstdio>
#include <string>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "polsum/automaton.h"
#include "polsum/model_count.h"
#include "polsum/regex.h"
#include "polsum/status.h"

namespace polsum {

Rational Similarity::value() const {
  if (union_count == 0) return Rational(1);
  return Rational(intersection, union_count);
}

double Similarity::ToDouble() const {
  return value().convert_to<double>();
}

std::string Similarity::ToDecimalString() const {
  Rational v = value();
  if (v == 1) return "1";
  if (v == 0) return "0";
  // Round half up at 6 digits.
  ModelCount scaled = (numerator(v) * 2000000 + denominator(v)) /
                      (denominator(v) * 2);
  // Values just below 1 must not print as "1".
  if (scaled >= 1000000) scaled = 999999;
  char buf[16];
  std::snprintf(buf, sizeof(buf), "0.%06d", scaled.convert_to<int>());
  return buf;
}

absl::StatusOr<Similarity> QuantifySimilarity(const Dfa& a, const Dfa& b,
                                              int bound,
                                              const AutomatonLimits& limits) {
  if (bound < 0) return absl::InvalidArgumentError("bound must be >= 0");
  POLSUM_ASSIGN_OR_RETURN(Dfa both, Intersect(a, b, limits));
  POLSUM_ASSIGN_OR_RETURN(Dfa either, Union(a, b, limits));
  return Similarity{CountModels(both, bound), CountModels(either, bound)};
}

absl::StatusOr<Similarity> QuantifySimilarity(const Regex& a, const Regex& b,
                                              int bound,
                                              const AutomatonLimits& limits) {
  POLSUM_ASSIGN_OR_RETURN(Dfa da, DfaFromRegex(a, limits));
  POLSUM_ASSIGN_OR_RETURN(Dfa db, DfaFromRegex(b, limits));
  return QuantifySimilarity(da, db, bound, limits);
}

}  // namespace polsum
