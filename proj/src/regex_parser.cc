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

#include "polsum/regex_parser.h"

#include <cctype>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "absl/status/statusor.h"
#include "polsum/alphabet.h"
#include "polsum/regex.h"
#include "polsum/status.h"

namespace polsum {
namespace {

CharSet Digits() { return CharSet::Range('0', '9'); }
CharSet WordChars() {
  return CharSet::Range('a', 'z') | CharSet::Range('A', 'Z') | Digits() |
         CharSet::Single('_');
}
// \s restricted to the alphabet is just the space character.
CharSet SpaceChars() { return CharSet::Single(' '); }

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  absl::StatusOr<Regex> Parse() {
    if (text_.empty()) return Syntax("empty regular expression");
    size_t end = text_.size();
    if (text_.front() == '^') pos_ = 1;
    if (end > pos_ && text_.back() == '$' && !IsEscaped(end - 1)) --end;
    text_ = text_.substr(0, end);

    POLSUM_ASSIGN_OR_RETURN(Regex r, ParseAlternation());
    if (pos_ < text_.size()) {
      if (text_[pos_] == ')') return Syntax("unmatched ')'");
      return Syntax("unexpected character");
    }
    return r;
  }

 private:
  bool AtEnd() const { return pos_ >= text_.size(); }
  char Peek() const { return text_[pos_]; }
  bool LookingAt(std::string_view s) const {
    return text_.substr(pos_).substr(0, s.size()) == s;
  }

  bool IsEscaped(size_t index) const {
    size_t backslashes = 0;
    while (index > 0 && text_[index - 1] == '\\') {
      ++backslashes;
      --index;
    }
    return backslashes % 2 == 1;
  }

  absl::Status Syntax(std::string message) const {
    return MakeError(ErrorKind::kSyntax,
                     message + " at offset " + std::to_string(pos_));
  }
  absl::Status Unsupported(std::string message) const {
    return MakeError(ErrorKind::kUnsupportedConstruct,
                     message + " at offset " + std::to_string(pos_));
  }
  absl::Status Alphabet(char c) const {
    return MakeError(ErrorKind::kAlphabet,
                     "byte " + std::to_string(static_cast<unsigned char>(c)) +
                         " at offset " + std::to_string(pos_) +
                         " is outside printable ASCII 32..126");
  }

  absl::StatusOr<Regex> ParseAlternation() {
    POLSUM_ASSIGN_OR_RETURN(Regex result, ParseConcatenation());
    while (!AtEnd() && Peek() == '|') {
      ++pos_;
      POLSUM_ASSIGN_OR_RETURN(Regex next, ParseConcatenation());
      result = Regex::Union(std::move(result), std::move(next));
    }
    return result;
  }

  absl::StatusOr<Regex> ParseConcatenation() {
    std::optional<Regex> result;
    while (!AtEnd() && Peek() != '|' && Peek() != ')') {
      POLSUM_ASSIGN_OR_RETURN(Regex piece, ParseRepetition());
      result = result.has_value()
                   ? Regex::Concat(std::move(*result), std::move(piece))
                   : std::move(piece);
    }
    return result.has_value() ? *result : Regex::Epsilon();
  }

  absl::StatusOr<Regex> ParseRepetition() {
    POLSUM_ASSIGN_OR_RETURN(Regex atom, ParseAtom());
    while (!AtEnd()) {
      char c = Peek();
      if (c == '*') {
        ++pos_;
        atom = Regex::Star(std::move(atom));
      } else if (c == '+') {
        ++pos_;
        atom = Regex::Concat(atom, Regex::Star(atom));
      } else if (c == '?') {
        ++pos_;
        atom = Regex::Union(std::move(atom), Regex::Epsilon());
      } else if (c == '{') {
        POLSUM_ASSIGN_OR_RETURN(atom, ParseBoundedRepeat(std::move(atom)));
      } else {
        break;
      }
      if (!AtEnd() && Peek() == '?') {
        return Unsupported("lazy quantifier");
      }
      if (!AtEnd() && Peek() == '+') {
        return Unsupported("possessive quantifier");
      }
    }
    return atom;
  }

  std::optional<int> ParseNumber() {
    size_t start = pos_;
    long value = 0;
    while (!AtEnd() && std::isdigit(static_cast<unsigned char>(Peek()))) {
      value = value * 10 + (Peek() - '0');
      if (value > 1'000'000) value = 1'000'000;
      ++pos_;
    }
    if (pos_ == start) return std::nullopt;
    return static_cast<int>(value);
  }

  absl::StatusOr<Regex> ParseBoundedRepeat(Regex atom) {
    ++pos_;  // '{'
    std::optional<int> min = ParseNumber();
    if (!min.has_value()) return Syntax("expected repeat count after '{'");
    std::optional<int> max = min;
    bool unbounded = false;
    if (!AtEnd() && Peek() == ',') {
      ++pos_;
      max = ParseNumber();
      if (!max.has_value()) unbounded = true;
    }
    if (AtEnd() || Peek() != '}') return Syntax("unterminated repeat bound");
    ++pos_;
    if (!unbounded && *max < *min) {
      return Syntax("repeat bound {m,n} with n < m");
    }
    int limit = unbounded ? *min : *max;
    if (limit > kMaxRepeatBound) {
      return Unsupported("repeat bound above " +
                         std::to_string(kMaxRepeatBound));
    }
    std::optional<Regex> result;
    auto append = [&result](Regex piece) {
      result = result.has_value() ? Regex::Concat(std::move(*result), piece)
                                  : std::move(piece);
    };
    for (int i = 0; i < *min; ++i) append(atom);
    if (unbounded) {
      append(Regex::Star(atom));
    } else {
      for (int i = *min; i < *max; ++i) {
        append(Regex::Union(atom, Regex::Epsilon()));
      }
    }
    return result.has_value() ? *result : Regex::Epsilon();
  }

  absl::StatusOr<Regex> ParseGroup() {
    ++pos_;  // '('
    if (!AtEnd() && Peek() == '?') {
      if (LookingAt("?:")) {
        pos_ += 2;
      } else if (LookingAt("?=") || LookingAt("?!") || LookingAt("?<=") ||
                 LookingAt("?<!")) {
        return Unsupported("lookaround assertion");
      } else if (LookingAt("?<") || LookingAt("?P<") || LookingAt("?'")) {
        return Unsupported("named group");
      } else {
        return Unsupported("group modifier");
      }
    }
    POLSUM_ASSIGN_OR_RETURN(Regex inner, ParseAlternation());
    if (AtEnd() || Peek() != ')') return Syntax("missing ')'");
    ++pos_;
    return inner;
  }

  // Parses the escape after a backslash into a character set. Used both
  // inside and outside brackets.
  absl::StatusOr<CharSet> ParseEscape() {
    ++pos_;  // '\'
    if (AtEnd()) return Syntax("trailing backslash");
    char c = Peek();
    ++pos_;
    switch (c) {
      case 'd':
        return Digits();
      case 'D':
        return Digits().Complement();
      case 'w':
        return WordChars();
      case 'W':
        return WordChars().Complement();
      case 's':
        return SpaceChars();
      case 'S':
        return SpaceChars().Complement();
      case 'b':
      case 'B':
      case 'A':
      case 'z':
      case 'Z':
      case 'G':
        return Unsupported("assertion escape");
      case 'k':
        return Unsupported("named backreference");
      case 'p':
      case 'P':
        return Unsupported("unicode property escape");
      case 'n':
      case 't':
      case 'r':
      case 'f':
      case 'v':
      case 'e':
      case 'a':
      case '0':
        return MakeError(ErrorKind::kAlphabet,
                         std::string("escape \\") + c +
                             " denotes a character outside the alphabet");
      case 'x': {
        if (pos_ + 2 > text_.size() ||
            !std::isxdigit(static_cast<unsigned char>(text_[pos_])) ||
            !std::isxdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
          return Syntax("malformed \\x escape");
        }
        char value = static_cast<char>(
            std::stoi(std::string(text_.substr(pos_, 2)), nullptr, 16));
        pos_ += 2;
        if (!InAlphabet(value)) return Alphabet(value);
        return CharSet::Single(value);
      }
      default:
        break;
    }
    if (c >= '1' && c <= '9') return Unsupported("backreference");
    if (std::isalnum(static_cast<unsigned char>(c))) {
      return Unsupported(std::string("unknown escape \\") + c);
    }
    if (!InAlphabet(c)) return Alphabet(c);
    return CharSet::Single(c);
  }

  absl::StatusOr<char> ParseClassChar() {
    char c = Peek();
    if (!InAlphabet(c)) return Alphabet(c);
    ++pos_;
    return c;
  }

  absl::StatusOr<Regex> ParseBracket() {
    ++pos_;  // '['
    bool negated = false;
    if (!AtEnd() && Peek() == '^') {
      negated = true;
      ++pos_;
    }
    CharSet set;
    bool first = true;
    while (true) {
      if (AtEnd()) return Syntax("unterminated character class");
      char c = Peek();
      if (c == ']' && !first) {
        ++pos_;
        break;
      }
      first = false;
      if (LookingAt("[:") || LookingAt("[=") || LookingAt("[.")) {
        return Unsupported("POSIX bracket expression");
      }
      if (c == '\\') {
        POLSUM_ASSIGN_OR_RETURN(CharSet escaped, ParseEscape());
        // A single escaped character may start a range.
        if (escaped.size() == 1 && !AtEnd() && Peek() == '-' &&
            pos_ + 1 < text_.size() && text_[pos_ + 1] != ']') {
          char lo = escaped.First();
          ++pos_;
          POLSUM_ASSIGN_OR_RETURN(char hi, ParseRangeEnd());
          if (hi < lo) return Syntax("inverted range in character class");
          set |= CharSet::Range(lo, hi);
        } else {
          set |= escaped;
        }
        continue;
      }
      POLSUM_ASSIGN_OR_RETURN(char lo, ParseClassChar());
      if (!AtEnd() && Peek() == '-' && pos_ + 1 < text_.size() &&
          text_[pos_ + 1] != ']') {
        ++pos_;
        POLSUM_ASSIGN_OR_RETURN(char hi, ParseRangeEnd());
        if (hi < lo) return Syntax("inverted range in character class");
        set |= CharSet::Range(lo, hi);
      } else {
        set.Insert(lo);
      }
    }
    if (negated) set = set.Complement();
    return Regex::Chars(set);
  }

  absl::StatusOr<char> ParseRangeEnd() {
    if (AtEnd()) return Syntax("unterminated character class");
    if (Peek() == '\\') {
      POLSUM_ASSIGN_OR_RETURN(CharSet escaped, ParseEscape());
      if (escaped.size() != 1) return Syntax("class escape as range bound");
      return escaped.First();
    }
    return ParseClassChar();
  }

  absl::StatusOr<Regex> ParseAtom() {
    char c = Peek();
    switch (c) {
      case '(':
        return ParseGroup();
      case '[':
        return ParseBracket();
      case '.':
        ++pos_;
        return Regex::Any();
      case '\\': {
        POLSUM_ASSIGN_OR_RETURN(CharSet set, ParseEscape());
        return Regex::Chars(set);
      }
      case '^':
      case '$':
        return Unsupported("anchor inside expression");
      case '*':
      case '+':
      case '?':
      case '{':
        return Syntax("quantifier without operand");
      default:
        break;
    }
    if (LookingAt(kEmptySetToken)) {
      pos_ += kEmptySetToken.size();
      return Regex::Empty();
    }
    if (!InAlphabet(c)) return Alphabet(c);
    ++pos_;
    return Regex::Char(c);
  }

  std::string_view text_;
  size_t pos_ = 0;
};

}  // namespace

absl::StatusOr<Regex> ParseRegex(std::string_view text) {
  return Parser(text).Parse();
}

}  // namespace polsum
