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

#ifndef POLSUM_MODEL_COUNT_H_
#define POLSUM_MODEL_COUNT_H_

#include "boost/multiprecision/cpp_int.hpp"
#include "polsum/automaton.h"

namespace polsum {

// Default string-length bound for counting.
inline constexpr int kDefaultCountBound = 100;

using ModelCount = boost::multiprecision::cpp_int;

// Number of accepted strings of length at most `bound` (bound >= 0), exact.
// Runs one vector-times-matrix step per length, where the matrix entry for
// (s, t) is the number of symbols moving s to t.
ModelCount CountModels(const Dfa& dfa, int bound);

}  // namespace polsum

#endif  // POLSUM_MODEL_COUNT_H_
