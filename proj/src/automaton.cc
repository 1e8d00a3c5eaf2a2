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

#include "polsum/automaton.h"

#include <algorithm>
#include <array>
#include <bitset>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <map>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "absl/strings/str_cat.h"
#include "polsum/alphabet.h"
#include "polsum/regex.h"
#include "polsum/status.h"
#include "polsum/wildcard.h"

namespace polsum {
namespace {

struct VectorHash {
  size_t operator()(const std::vector<int>& v) const {
    size_t h = v.size();
    for (int x : v) {
      h ^= static_cast<size_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

absl::Status StateBlowup(size_t limit) {
  return MakeError(ErrorKind::kStateBlowup,
                   "automaton exceeds the cap of " + std::to_string(limit) +
                       " states");
}

absl::Status ValidateTable(const DfaTable& t) {
  if (t.num_classes < 1 || t.num_classes > kAlphabetSize) {
    return absl::InvalidArgumentError("class count out of range");
  }
  if (t.accepting.empty()) {
    return absl::InvalidArgumentError("automaton has no states");
  }
  if (t.table.size() !=
      static_cast<size_t>(t.num_states()) * static_cast<size_t>(t.num_classes)) {
    return absl::InvalidArgumentError("transition table size mismatch");
  }
  for (uint8_t c : t.class_of) {
    if (c >= t.num_classes) {
      return absl::InvalidArgumentError("symbol mapped to unknown class");
    }
  }
  for (StateId s : t.table) {
    if (s < 0 || s >= t.num_states()) {
      return absl::InvalidArgumentError("successor out of range");
    }
  }
  if (t.start < 0 || t.start >= t.num_states()) {
    return absl::InvalidArgumentError("start state out of range");
  }
  return absl::OkStatus();
}

// Moore partition refinement over the states reachable from the start state,
// followed by class coarsening and breadth-first renumbering.
struct Minimizer {
  const DfaTable& in;

  DfaTable Run() const {
    const int k = in.num_classes;
    auto succ = [&](int s, int c) {
      return in.table[static_cast<size_t>(s) * k + c];
    };

    // Reachable states.
    std::vector<int> index(in.num_states(), -1);
    std::vector<int> states;
    std::deque<int> queue{in.start};
    index[in.start] = 0;
    states.push_back(in.start);
    while (!queue.empty()) {
      int s = queue.front();
      queue.pop_front();
      for (int c = 0; c < k; ++c) {
        int t = succ(s, c);
        if (index[t] < 0) {
          index[t] = static_cast<int>(states.size());
          states.push_back(t);
          queue.push_back(t);
        }
      }
    }
    const int n = static_cast<int>(states.size());

    std::vector<int> block(n);
    int num_blocks = 0;
    {
      int acc = -1, rej = -1;
      for (int i = 0; i < n; ++i) {
        int& id = in.accepting[states[i]] ? acc : rej;
        if (id < 0) id = num_blocks++;
        block[i] = id;
      }
    }
    std::vector<int> signature(k + 1);
    while (true) {
      std::unordered_map<std::vector<int>, int, VectorHash> ids;
      ids.reserve(n * 2);
      std::vector<int> next(n);
      for (int i = 0; i < n; ++i) {
        signature[0] = block[i];
        for (int c = 0; c < k; ++c) {
          signature[c + 1] = block[index[succ(states[i], c)]];
        }
        auto [it, inserted] =
            ids.emplace(signature, static_cast<int>(ids.size()));
        next[i] = it->second;
      }
      int new_blocks = static_cast<int>(ids.size());
      block = std::move(next);
      if (new_blocks == num_blocks) break;
      num_blocks = new_blocks;
    }

    // Quotient automaton over blocks.
    std::vector<int> block_rep(num_blocks, -1);
    for (int i = 0; i < n; ++i) {
      if (block_rep[block[i]] < 0) block_rep[block[i]] = i;
    }
    auto block_succ = [&](int b, int c) {
      return block[index[succ(states[block_rep[b]], c)]];
    };

    // Coarsest class partition: symbols are interchangeable iff their old
    // classes have identical columns. New class ids follow smallest member.
    std::vector<int> old_to_new(k, -1);
    std::vector<int> new_to_old;
    for (int c = 0; c < k; ++c) {
      for (size_t j = 0; j < new_to_old.size(); ++j) {
        int d = new_to_old[j];
        bool same = true;
        for (int b = 0; b < num_blocks && same; ++b) {
          same = block_succ(b, c) == block_succ(b, d);
        }
        if (same) {
          old_to_new[c] = static_cast<int>(j);
          break;
        }
      }
      if (old_to_new[c] < 0) {
        old_to_new[c] = static_cast<int>(new_to_old.size());
        new_to_old.push_back(c);
      }
    }
    std::array<int, kAlphabetSize> symbol_class{};
    std::vector<int> order(new_to_old.size(), -1);
    int num_classes = 0;
    for (int i = 0; i < kAlphabetSize; ++i) {
      int c = old_to_new[in.class_of[i]];
      if (order[c] < 0) order[c] = num_classes++;
      symbol_class[i] = order[c];
    }
    std::vector<int> class_rep(num_classes);
    for (size_t c = 0; c < new_to_old.size(); ++c) {
      class_rep[order[c]] = new_to_old[c];
    }

    // Canonical breadth-first numbering.
    std::vector<int> number(num_blocks, -1);
    std::vector<int> by_number;
    int start_block = block[index[in.start]];
    number[start_block] = 0;
    by_number.push_back(start_block);
    for (size_t head = 0; head < by_number.size(); ++head) {
      int b = by_number[head];
      for (int c = 0; c < num_classes; ++c) {
        int t = block_succ(b, class_rep[c]);
        if (number[t] < 0) {
          number[t] = static_cast<int>(by_number.size());
          by_number.push_back(t);
        }
      }
    }

    DfaTable out;
    out.num_classes = num_classes;
    for (int i = 0; i < kAlphabetSize; ++i) {
      out.class_of[i] = static_cast<uint8_t>(symbol_class[i]);
    }
    out.start = 0;
    out.accepting.resize(num_blocks);
    out.table.resize(static_cast<size_t>(num_blocks) * num_classes);
    for (int b = 0; b < num_blocks; ++b) {
      int id = number[b];
      out.accepting[id] = in.accepting[states[block_rep[b]]];
      for (int c = 0; c < num_classes; ++c) {
        out.table[static_cast<size_t>(id) * num_classes + c] =
            number[block_succ(b, class_rep[c])];
      }
    }
    return out;
  }
};

// Partition of the alphabet refined by every set in `sets`. Returns the class
// count and fills `class_of`.
int RefinePartition(const std::vector<CharSet>& sets,
                    std::array<uint8_t, kAlphabetSize>& class_of) {
  std::array<int, kAlphabetSize> cls{};
  int count = 1;
  for (const CharSet& set : sets) {
    std::map<std::pair<int, bool>, int> split;
    for (int i = 0; i < kAlphabetSize; ++i) {
      auto key = std::make_pair(cls[i], set.Contains(SymbolChar(i)));
      auto [it, inserted] = split.emplace(key, static_cast<int>(split.size()));
      cls[i] = it->second;
    }
    count = static_cast<int>(split.size());
    if (count == kAlphabetSize) break;
  }
  for (int i = 0; i < kAlphabetSize; ++i) {
    class_of[i] = static_cast<uint8_t>(cls[i]);
  }
  return count;
}

// Thompson automaton with character-set edges.
class ThompsonNfa {
 public:
  struct Fragment {
    int start;
    int accept;
  };

  int AddState() {
    epsilon_.emplace_back();
    char_edges_.emplace_back();
    return static_cast<int>(epsilon_.size()) - 1;
  }

  int SetIndex(const CharSet& set) {
    auto [it, inserted] =
        set_index_.emplace(set, static_cast<int>(sets_.size()));
    if (inserted) sets_.push_back(set);
    return it->second;
  }

  Fragment Build(const Regex& r) {
    switch (r.kind()) {
      case Regex::Kind::kEmpty: {
        return {AddState(), AddState()};
      }
      case Regex::Kind::kEpsilon: {
        int s = AddState(), t = AddState();
        epsilon_[s].push_back(t);
        return {s, t};
      }
      case Regex::Kind::kCharClass: {
        int s = AddState(), t = AddState();
        char_edges_[s].push_back({SetIndex(r.chars()), t});
        return {s, t};
      }
      case Regex::Kind::kConcat: {
        Fragment a = Build(r.left());
        Fragment b = Build(r.right());
        epsilon_[a.accept].push_back(b.start);
        return {a.start, b.accept};
      }
      case Regex::Kind::kUnion: {
        int s = AddState();
        Fragment a = Build(r.left());
        Fragment b = Build(r.right());
        int t = AddState();
        epsilon_[s].push_back(a.start);
        epsilon_[s].push_back(b.start);
        epsilon_[a.accept].push_back(t);
        epsilon_[b.accept].push_back(t);
        return {s, t};
      }
      case Regex::Kind::kStar: {
        int s = AddState();
        Fragment a = Build(r.inner());
        int t = AddState();
        epsilon_[s].push_back(a.start);
        epsilon_[s].push_back(t);
        epsilon_[a.accept].push_back(a.start);
        epsilon_[a.accept].push_back(t);
        return {s, t};
      }
    }
    return {AddState(), AddState()};
  }

  int num_states() const { return static_cast<int>(epsilon_.size()); }
  const std::vector<CharSet>& sets() const { return sets_; }
  const std::vector<int>& epsilon(int s) const { return epsilon_[s]; }
  const std::vector<std::pair<int, int>>& char_edges(int s) const {
    return char_edges_[s];
  }

 private:
  std::vector<std::vector<int>> epsilon_;
  std::vector<std::vector<std::pair<int, int>>> char_edges_;  // (set, target)
  std::vector<CharSet> sets_;
  std::map<CharSet, int> set_index_;
};

absl::StatusOr<Dfa> Product(const Dfa& a, const Dfa& b,
                            const AutomatonLimits& limits, bool (*op)(bool,
                                                                      bool)) {
  // Combined alphabet partition.
  DfaTable out;
  std::map<std::pair<int, int>, int> pair_class;
  std::vector<std::pair<int, int>> class_pairs;
  for (int i = 0; i < kAlphabetSize; ++i) {
    char c = SymbolChar(i);
    auto key = std::make_pair(a.class_of(c), b.class_of(c));
    auto [it, inserted] =
        pair_class.emplace(key, static_cast<int>(class_pairs.size()));
    if (inserted) class_pairs.push_back(key);
    out.class_of[i] = static_cast<uint8_t>(it->second);
  }
  const int k = static_cast<int>(class_pairs.size());
  out.num_classes = k;

  std::unordered_map<uint64_t, StateId> ids;
  std::vector<std::pair<StateId, StateId>> pairs;
  auto intern = [&](StateId x, StateId y) -> StateId {
    uint64_t key = (static_cast<uint64_t>(x) << 32) | static_cast<uint32_t>(y);
    auto [it, inserted] = ids.emplace(key, static_cast<StateId>(pairs.size()));
    if (inserted) pairs.emplace_back(x, y);
    return it->second;
  };
  intern(a.start(), b.start());
  for (size_t head = 0; head < pairs.size(); ++head) {
    if (pairs.size() > limits.max_states) return StateBlowup(limits.max_states);
    auto [x, y] = pairs[head];
    out.accepting.push_back(op(a.IsAccepting(x), b.IsAccepting(y)));
    for (int c = 0; c < k; ++c) {
      out.table.push_back(intern(a.NextByClass(x, class_pairs[c].first),
                                 b.NextByClass(y, class_pairs[c].second)));
    }
  }
  if (pairs.size() > limits.max_states) return StateBlowup(limits.max_states);
  return Dfa::FromTable(out);
}

}  // namespace

Dfa::Dfa() : classes_{CharSet::Full()}, table_{0}, accepting_{false} {}

absl::StatusOr<Dfa> Dfa::FromTable(const DfaTable& table) {
  POLSUM_RETURN_IF_ERROR(ValidateTable(table));
  DfaTable minimal = Minimizer{table}.Run();
  Dfa dfa;
  dfa.class_of_ = minimal.class_of;
  dfa.classes_.assign(minimal.num_classes, CharSet());
  for (int i = 0; i < kAlphabetSize; ++i) {
    dfa.classes_[minimal.class_of[i]].Insert(SymbolChar(i));
  }
  dfa.table_ = std::move(minimal.table);
  dfa.accepting_ = std::move(minimal.accepting);
  return dfa;
}

Dfa Dfa::EmptyLanguage() { return Dfa(); }

Dfa Dfa::Universal() {
  Dfa dfa;
  dfa.accepting_[0] = true;
  return dfa;
}

Dfa Dfa::Literal(std::string_view text) {
  // Chain of text.size()+1 states plus a dead state.
  DfaTable t;
  t.num_classes = kAlphabetSize;
  for (int i = 0; i < kAlphabetSize; ++i) t.class_of[i] = static_cast<uint8_t>(i);
  const StateId dead = static_cast<StateId>(text.size() + 1);
  for (size_t s = 0; s <= text.size() + 1; ++s) {
    t.accepting.push_back(s == text.size());
    for (int c = 0; c < kAlphabetSize; ++c) {
      bool advance = s < text.size() && InAlphabet(text[s]) &&
                     SymbolIndex(text[s]) == c;
      t.table.push_back(advance ? static_cast<StateId>(s + 1) : dead);
    }
  }
  return *FromTable(t);
}

std::vector<std::pair<CharSet, StateId>> Dfa::Transitions(StateId s) const {
  std::map<StateId, CharSet> by_target;
  for (int c = 0; c < num_classes(); ++c) {
    by_target[NextByClass(s, c)] |= classes_[c];
  }
  std::vector<std::pair<CharSet, StateId>> out;
  out.reserve(by_target.size());
  for (auto& [target, chars] : by_target) out.emplace_back(chars, target);
  return out;
}

std::vector<bool> Dfa::LiveStates() const {
  const int n = num_states();
  std::vector<std::vector<StateId>> reverse(n);
  for (StateId s = 0; s < n; ++s) {
    for (int c = 0; c < num_classes(); ++c) {
      reverse[NextByClass(s, c)].push_back(s);
    }
  }
  std::vector<bool> live(n, false);
  std::vector<StateId> stack;
  for (StateId s = 0; s < n; ++s) {
    if (accepting_[s]) {
      live[s] = true;
      stack.push_back(s);
    }
  }
  while (!stack.empty()) {
    StateId s = stack.back();
    stack.pop_back();
    for (StateId p : reverse[s]) {
      if (!live[p]) {
        live[p] = true;
        stack.push_back(p);
      }
    }
  }
  return live;
}

DfaTable Dfa::ToTable() const {
  DfaTable t;
  t.class_of = class_of_;
  t.num_classes = num_classes();
  t.table = table_;
  t.accepting = accepting_;
  t.start = 0;
  return t;
}

size_t Dfa::Hash() const {
  size_t h = std::hash<std::string_view>()(std::string_view(
      reinterpret_cast<const char*>(class_of_.data()), class_of_.size()));
  auto mix = [&h](size_t v) {
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  };
  for (StateId s : table_) mix(static_cast<size_t>(s));
  for (bool a : accepting_) mix(a ? 1 : 2);
  return h;
}

absl::StatusOr<Dfa> DfaFromRegex(const Regex& regex,
                                 const AutomatonLimits& limits) {
  ThompsonNfa nfa;
  ThompsonNfa::Fragment frag = nfa.Build(regex);

  DfaTable out;
  out.num_classes = RefinePartition(nfa.sets(), out.class_of);
  const int k = out.num_classes;

  // Classes covered by each distinct edge set.
  std::vector<std::bitset<kAlphabetSize>> covers(nfa.sets().size());
  for (size_t i = 0; i < nfa.sets().size(); ++i) {
    nfa.sets()[i].ForEach(
        [&](char c) { covers[i].set(out.class_of[SymbolIndex(c)]); });
  }

  std::vector<uint32_t> mark(nfa.num_states(), 0);
  uint32_t epoch = 0;
  std::vector<int> stack;
  auto closure = [&](std::vector<int> seeds) {
    ++epoch;
    std::vector<int> result;
    stack.clear();
    for (int s : seeds) {
      if (mark[s] != epoch) {
        mark[s] = epoch;
        stack.push_back(s);
      }
    }
    while (!stack.empty()) {
      int s = stack.back();
      stack.pop_back();
      result.push_back(s);
      for (int t : nfa.epsilon(s)) {
        if (mark[t] != epoch) {
          mark[t] = epoch;
          stack.push_back(t);
        }
      }
    }
    std::sort(result.begin(), result.end());
    return result;
  };

  std::unordered_map<std::vector<int>, StateId, VectorHash> ids;
  std::vector<std::vector<int>> subsets;
  auto intern = [&](std::vector<int> subset) -> StateId {
    auto [it, inserted] =
        ids.emplace(subset, static_cast<StateId>(subsets.size()));
    if (inserted) subsets.push_back(std::move(subset));
    return it->second;
  };
  intern(closure({frag.start}));

  std::vector<std::vector<int>> buckets(k);
  for (size_t head = 0; head < subsets.size(); ++head) {
    if (subsets.size() > limits.max_states) return StateBlowup(limits.max_states);
    const std::vector<int> current = subsets[head];
    out.accepting.push_back(
        std::binary_search(current.begin(), current.end(), frag.accept));
    for (auto& b : buckets) b.clear();
    for (int s : current) {
      for (auto [set, target] : nfa.char_edges(s)) {
        const auto& cov = covers[set];
        for (int c = 0; c < k; ++c) {
          if (cov.test(c)) buckets[c].push_back(target);
        }
      }
    }
    for (int c = 0; c < k; ++c) {
      out.table.push_back(intern(closure(buckets[c])));
    }
  }
  if (subsets.size() > limits.max_states) return StateBlowup(limits.max_states);
  return Dfa::FromTable(out);
}

absl::StatusOr<Dfa> DfaFromPattern(const WildcardPattern& pattern,
                                   const AutomatonLimits& limits) {
  Regex r = Regex::Epsilon();
  for (const WildcardPattern::Element& e : pattern.elements()) {
    Regex piece;
    switch (e.kind) {
      case WildcardPattern::ElementKind::kLiteral:
        piece = Regex::Char(e.literal);
        break;
      case WildcardPattern::ElementKind::kAnyChar:
        piece = Regex::Any();
        break;
      case WildcardPattern::ElementKind::kAnyString:
        piece = Regex::Star(Regex::Any());
        break;
    }
    r = Regex::SimplifiedConcat(r, piece);
  }
  return DfaFromRegex(r, limits);
}

absl::StatusOr<Dfa> Union(const Dfa& a, const Dfa& b,
                          const AutomatonLimits& limits) {
  return Product(a, b, limits, [](bool x, bool y) { return x || y; });
}

absl::StatusOr<Dfa> Intersect(const Dfa& a, const Dfa& b,
                              const AutomatonLimits& limits) {
  return Product(a, b, limits, [](bool x, bool y) { return x && y; });
}

absl::StatusOr<Dfa> Difference(const Dfa& a, const Dfa& b,
                               const AutomatonLimits& limits) {
  return Product(a, b, limits, [](bool x, bool y) { return x && !y; });
}

Dfa Complement(const Dfa& a) {
  DfaTable t = a.ToTable();
  t.accepting.flip();
  return *Dfa::FromTable(t);
}

bool IsEmpty(const Dfa& a) {
  // Minimal automata have an accepting state iff the language is non-empty.
  for (StateId s = 0; s < a.num_states(); ++s) {
    if (a.IsAccepting(s)) return false;
  }
  return true;
}

absl::StatusOr<bool> Equivalent(const Dfa& a, const Dfa& b,
                                const AutomatonLimits& limits) {
  POLSUM_ASSIGN_OR_RETURN(Dfa a_minus_b, Difference(a, b, limits));
  if (!IsEmpty(a_minus_b)) return false;
  POLSUM_ASSIGN_OR_RETURN(Dfa b_minus_a, Difference(b, a, limits));
  return IsEmpty(b_minus_a);
}

absl::StatusOr<bool> Accepts(const Dfa& a, std::string_view s) {
  POLSUM_RETURN_IF_ERROR(CheckAlphabet(s));
  StateId state = a.start();
  for (char c : s) state = a.Next(state, c);
  return a.IsAccepting(state);
}

namespace {

std::string DotEscape(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string ToDot(const Dfa& a, std::string_view name) {
  std::vector<bool> live = a.LiveStates();
  std::string out = absl::StrCat("digraph ", std::string(name), " {\n");
  out += "  rankdir=LR;\n  __start [shape=point];\n  __start -> s0;\n";
  for (StateId s = 0; s < a.num_states(); ++s) {
    if (!live[s] && s != a.start()) continue;
    absl::StrAppend(&out, "  s", s, " [shape=",
                    a.IsAccepting(s) ? "doublecircle" : "circle", "];\n");
  }
  for (StateId s = 0; s < a.num_states(); ++s) {
    if (!live[s]) continue;
    for (const auto& [chars, target] : a.Transitions(s)) {
      if (!live[target]) continue;
      absl::StrAppend(&out, "  s", s, " -> s", target, " [label=\"",
                      DotEscape(chars.DebugString()), "\"];\n");
    }
  }
  out += "}\n";
  return out;
}

}  // namespace polsum
