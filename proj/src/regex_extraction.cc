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

#include "polsum/regex_extraction.h"

#include <cstddef>
#include <limits>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "polsum/automaton.h"
#include "polsum/regex.h"

namespace polsum {
namespace {

size_t SaturatingAdd(size_t a, size_t b) {
  return a > std::numeric_limits<size_t>::max() - b
             ? std::numeric_limits<size_t>::max()
             : a + b;
}

class GeneralizedNfa {
 public:
  explicit GeneralizedNfa(int num_nodes)
      : out_(num_nodes), in_(num_nodes), removed_(num_nodes, false) {}

  void AddEdge(int from, int to, const Regex& label) {
    auto it = out_[from].find(to);
    if (it == out_[from].end()) {
      out_[from].emplace(to, label);
      in_[to].insert(from);
    } else {
      it->second = Regex::SimplifiedUnion(it->second, label);
    }
  }

  const Regex* Label(int from, int to) const {
    auto it = out_[from].find(to);
    return it == out_[from].end() ? nullptr : &it->second;
  }

  size_t InDegree(int q) const {
    return in_[q].size() - (in_[q].count(q) ? 1 : 0);
  }
  size_t OutDegree(int q) const {
    return out_[q].size() - (out_[q].count(q) ? 1 : 0);
  }

  void Eliminate(int q) {
    Regex loop = Regex::Epsilon();
    if (const Regex* self = Label(q, q)) loop = Regex::SimplifiedStar(*self);

    std::vector<std::pair<int, Regex>> preds, succs;
    for (int p : in_[q]) {
      if (p != q) preds.emplace_back(p, out_[p].at(q));
    }
    for (const auto& [r, label] : out_[q]) {
      if (r != q) succs.emplace_back(r, label);
    }
    for (const auto& [p, into] : preds) {
      Regex prefix = Regex::SimplifiedConcat(into, loop);
      for (const auto& [r, from] : succs) {
        AddEdge(p, r, Regex::SimplifiedConcat(prefix, from));
      }
    }
    for (const auto& [p, unused] : preds) out_[p].erase(q);
    for (const auto& [r, unused] : succs) in_[r].erase(q);
    out_[q].clear();
    in_[q].clear();
    removed_[q] = true;
  }

  // Approximate size of the labels added by eliminating q: each in-label is
  // copied once per successor and each out-label once per predecessor.
  size_t EliminationWeight(int q) const {
    const size_t ins = InDegree(q), outs = OutDegree(q);
    size_t loop = 0;
    if (const Regex* self = Label(q, q)) loop = self->size();
    size_t weight = 0;
    for (int p : in_[q]) {
      if (p != q) weight = SaturatingAdd(weight, out_[p].at(q).size() * outs);
    }
    for (const auto& [r, label] : out_[q]) {
      if (r != q) weight = SaturatingAdd(weight, label.size() * ins);
    }
    return SaturatingAdd(weight, loop * ins * outs);
  }

  bool removed(int q) const { return removed_[q]; }

 private:
  std::vector<std::map<int, Regex>> out_;
  std::vector<std::set<int>> in_;
  std::vector<bool> removed_;
};

}  // namespace

Regex ExtractRegex(const Dfa& dfa) {
  // Canonical Dfas have every state reachable; only dead states need pruning.
  std::vector<bool> live = dfa.LiveStates();
  if (!live[dfa.start()]) return Regex::Empty();

  const int n = dfa.num_states();
  const int initial = n;
  const int final_node = n + 1;
  GeneralizedNfa gnfa(n + 2);
  gnfa.AddEdge(initial, dfa.start(), Regex::Epsilon());
  for (StateId s = 0; s < n; ++s) {
    if (!live[s]) continue;
    if (dfa.IsAccepting(s)) gnfa.AddEdge(s, final_node, Regex::Epsilon());
    for (const auto& [chars, target] : dfa.Transitions(s)) {
      if (live[target]) gnfa.AddEdge(s, target, Regex::Chars(chars));
    }
  }

  int remaining = 0;
  for (StateId s = 0; s < n; ++s) remaining += live[s] ? 1 : 0;
  while (remaining-- > 0) {
    int best = -1;
    size_t best_cost = std::numeric_limits<size_t>::max();
    for (StateId s = 0; s < n; ++s) {
      if (!live[s] || gnfa.removed(s)) continue;
      size_t cost = gnfa.EliminationWeight(s);
      if (cost < best_cost) {
        best_cost = cost;
        best = s;
      }
    }
    gnfa.Eliminate(best);
  }

  const Regex* result = gnfa.Label(initial, final_node);
  return result == nullptr ? Regex::Empty() : *result;
}

}  // namespace polsum
