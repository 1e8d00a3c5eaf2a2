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

#include "polsum/model_count.h"

#include <cstddef>
#include <vector>

#include "polsum/automaton.h"

namespace polsum {
namespace {

struct WeightedEdge {
  StateId target;
  unsigned weight;
};

}  // namespace

ModelCount CountModels(const Dfa& dfa, int bound) {
  if (bound < 0) return 0;
  const int n = dfa.num_states();
  std::vector<bool> live = dfa.LiveStates();

  // Mass that leaves the live region can never be accepted again.
  std::vector<std::vector<WeightedEdge>> edges(n);
  for (StateId s = 0; s < n; ++s) {
    if (!live[s]) continue;
    for (const auto& [chars, target] : dfa.Transitions(s)) {
      if (live[target]) {
        edges[s].push_back({target, static_cast<unsigned>(chars.size())});
      }
    }
  }

  std::vector<ModelCount> current(n), next(n);
  current[dfa.start()] = live[dfa.start()] ? 1 : 0;
  ModelCount total = 0;
  for (int length = 0;; ++length) {
    for (StateId s = 0; s < n; ++s) {
      if (dfa.IsAccepting(s)) total += current[s];
    }
    if (length == bound) break;
    for (auto& v : next) v = 0;
    for (StateId s = 0; s < n; ++s) {
      if (current[s].is_zero()) continue;
      for (const WeightedEdge& e : edges[s]) {
        next[e.target] += current[s] * e.weight;
      }
    }
    current.swap(next);
  }
  return total;
}

}  // namespace polsum
