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

#ifndef POLSUM_AUTOMATON_H_
#define POLSUM_AUTOMATON_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "absl/status/statusor.h"
#include "polsum/alphabet.h"
#include "polsum/regex.h"
#include "polsum/wildcard.h"

namespace polsum {

inline constexpr size_t kDefaultMaxStates = 100'000;

struct AutomatonLimits {
  // Upper bound on states created by determinization or product
  // construction. Exceeding it fails with StateBlowup.
  size_t max_states = kDefaultMaxStates;
};

using StateId = int32_t;

// Unminimized total DFA in table form. The alphabet is partitioned into
// classes: `class_of[i]` is the class of symbol i, and `table` holds
// `num_states * num_classes` successor entries in row-major order.
struct DfaTable {
  std::array<uint8_t, kAlphabetSize> class_of{};
  int num_classes = 1;
  std::vector<StateId> table;
  std::vector<bool> accepting;
  StateId start = 0;

  int num_states() const { return static_cast<int>(accepting.size()); }
};

// Total deterministic automaton over the printable-ASCII alphabet, always
// kept minimal and in canonical form: the start state is 0, states are
// numbered in breadth-first order, and alphabet classes are the coarsest
// partition ordered by smallest member. Two Dfas accept the same language iff
// they compare equal.
class Dfa {
 public:
  // The empty language.
  Dfa();

  // Minimizes and canonicalizes `table`. Fails if the table is malformed
  // (out-of-range successor or class id, size mismatch).
  static absl::StatusOr<Dfa> FromTable(const DfaTable& table);

  static Dfa EmptyLanguage();
  // All strings.
  static Dfa Universal();
  static Dfa Literal(std::string_view text);

  int num_states() const { return static_cast<int>(accepting_.size()); }
  StateId start() const { return 0; }
  bool IsAccepting(StateId s) const { return accepting_[s]; }

  int num_classes() const { return static_cast<int>(classes_.size()); }
  const CharSet& class_chars(int cls) const { return classes_[cls]; }
  int class_of(char c) const { return class_of_[SymbolIndex(c)]; }

  StateId NextByClass(StateId s, int cls) const {
    return table_[static_cast<size_t>(s) * classes_.size() + cls];
  }
  // Requires InAlphabet(c).
  StateId Next(StateId s, char c) const { return NextByClass(s, class_of(c)); }

  // Outgoing moves of `s` grouped by target, in ascending target order. The
  // character sets partition the alphabet.
  std::vector<std::pair<CharSet, StateId>> Transitions(StateId s) const;

  // States from which some accepting state is reachable.
  std::vector<bool> LiveStates() const;

  DfaTable ToTable() const;

  size_t Hash() const;

  friend bool operator==(const Dfa&, const Dfa&) = default;

 private:
  std::array<uint8_t, kAlphabetSize> class_of_{};
  std::vector<CharSet> classes_;
  std::vector<StateId> table_;
  std::vector<bool> accepting_;
};

// Language of a policy wildcard pattern. Patterns such as `*a??????` need
// exponentially many states, so this can fail with StateBlowup.
absl::StatusOr<Dfa> DfaFromPattern(const WildcardPattern& pattern,
                                   const AutomatonLimits& limits = {});

// Thompson construction, subset construction, then minimization.
absl::StatusOr<Dfa> DfaFromRegex(const Regex& regex,
                                 const AutomatonLimits& limits = {});

absl::StatusOr<Dfa> Union(const Dfa& a, const Dfa& b,
                          const AutomatonLimits& limits = {});
absl::StatusOr<Dfa> Intersect(const Dfa& a, const Dfa& b,
                              const AutomatonLimits& limits = {});
Dfa Complement(const Dfa& a);
absl::StatusOr<Dfa> Difference(const Dfa& a, const Dfa& b,
                               const AutomatonLimits& limits = {});

bool IsEmpty(const Dfa& a);

// Language equality, decided as emptiness of both differences.
absl::StatusOr<bool> Equivalent(const Dfa& a, const Dfa& b,
                                const AutomatonLimits& limits = {});

// Membership. AlphabetError if `s` has characters outside the alphabet.
absl::StatusOr<bool> Accepts(const Dfa& a, std::string_view s);

// Graphviz rendering with class-labeled edges. The dead state, if any, and
// edges into it are omitted.
std::string ToDot(const Dfa& a, std::string_view name = "dfa");

}  // namespace polsum

#endif  // POLSUM_AUTOMATON_H_
