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

#ifndef POLSUM_REGEX_EXTRACTION_H_
#define POLSUM_REGEX_EXTRACTION_H_

#include "polsum/automaton.h"
#include "polsum/regex.h"

namespace polsum {

// Converts `dfa` to a regex with the same language by state elimination.
//
// The live, reachable states are wrapped in a generalized NFA with a fresh
// initial state (ε-edge to the start state) and a fresh final state (ε-edges
// from every accepting state). Interior states are then removed one at a time,
// always picking the state with the smallest in-degree × out-degree (self
// loops excluded, ties to the lowest id); each in/out edge pair p→q→r is
// replaced by p→r labeled R(p,q)·R(q,q)*·R(q,r), unioned with any existing
// p→r label. The label left on initial→final is the result, or ∅ if the
// language is empty. Labels are built with the simplifying constructors.
Regex ExtractRegex(const Dfa& dfa);

}  // namespace polsum

#endif  // POLSUM_REGEX_EXTRACTION_H_
