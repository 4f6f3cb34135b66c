// Copyright 2026 The arrowkit Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ARROWKIT_PATTERN_HPP_
#define ARROWKIT_PATTERN_HPP_

#include <charconv>
#include <stdexcept>
#include <string>
#include <string_view>

#include "arrowkit/graph.hpp"

namespace arrowkit {

enum class PatternKind { kMatching, kPath, kCycle, kPathUnion };

class PatternError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Target graph of an arrowing query: tK2, P_m, C_n or nP_m. Always stored
// normalized: 1P_m is P_m and M1 (a single edge) is P2.
class Pattern {
 public:
  // P1, the single vertex.
  Pattern() : Pattern(PatternKind::kPath, 1, 1) {}

  static Pattern matching(int t) {
    if (t < 1) throw PatternError("matching size must be >= 1");
    if (t == 1) return path(2);
    return Pattern(PatternKind::kMatching, t, 2);
  }
  static Pattern path(int m) {
    if (m < 1) throw PatternError("path order must be >= 1");
    return Pattern(PatternKind::kPath, 1, m);
  }
  static Pattern cycle(int n) {
    if (n < 3) throw PatternError("cycle length must be >= 3");
    return Pattern(PatternKind::kCycle, 1, n);
  }
  static Pattern path_union(int n, int m) {
    if (n < 1) throw PatternError("path count must be >= 1");
    if (n == 1) return path(m);
    if (m < 1) throw PatternError("path order must be >= 1");
    return Pattern(PatternKind::kPathUnion, n, m);
  }

  PatternKind kind() const { return kind_; }
  // Number of parallel copies: t for tK2, n for nP_m, otherwise 1.
  int copies() const { return copies_; }
  // Vertices per copy: 2 for tK2, m for P_m / nP_m, n for C_n.
  int length() const { return length_; }

  // Path and PathUnion both describe n disjoint copies of P_m.
  bool is_path_like() const {
    return kind_ == PatternKind::kPath || kind_ == PatternKind::kPathUnion;
  }

  int order() const { return copies_ * length_; }
  int edge_count() const {
    switch (kind_) {
      case PatternKind::kMatching: return copies_;
      case PatternKind::kCycle: return length_;
      default: return copies_ * (length_ - 1);
    }
  }

  std::string to_string() const {
    switch (kind_) {
      case PatternKind::kMatching: return "M" + std::to_string(copies_);
      case PatternKind::kPath: return "P" + std::to_string(length_);
      case PatternKind::kCycle: return "C" + std::to_string(length_);
      case PatternKind::kPathUnion:
        return std::to_string(copies_) + "P" + std::to_string(length_);
    }
    return {};
  }

  // Labeled copy of the pattern graph; path-like copies are laid out
  // consecutively.
  Graph to_graph() const {
    switch (kind_) {
      case PatternKind::kMatching: return repeat_union(make_path(2), copies_);
      case PatternKind::kCycle: return make_cycle(length_);
      default: return repeat_union(make_path(length_), copies_);
    }
  }

  friend bool operator==(const Pattern&, const Pattern&) = default;

 private:
  Pattern(PatternKind kind, int copies, int length)
      : kind_(kind), copies_(copies), length_(length) {}

  PatternKind kind_;
  int copies_;
  int length_;
};

namespace internal {

inline int parse_count(std::string_view digits, std::string_view whole) {
  int value = 0;
  if (digits.empty() || digits.size() > 4) {
    throw PatternError("malformed pattern '" + std::string(whole) + "'");
  }
  const auto [ptr, ec] =
      std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc() || ptr != digits.data() + digits.size()) {
    throw PatternError("malformed pattern '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace internal

// Grammar: M<t> | P<m> | C<n> | <n>P<m>
inline Pattern parse_pattern(std::string_view text) {
  if (text.empty()) throw PatternError("empty pattern");
  const char head = text.front();
  if (head == 'M') return Pattern::matching(internal::parse_count(text.substr(1), text));
  if (head == 'P') return Pattern::path(internal::parse_count(text.substr(1), text));
  if (head == 'C') return Pattern::cycle(internal::parse_count(text.substr(1), text));
  const auto p = text.find('P');
  if (p == std::string_view::npos) {
    throw PatternError("malformed pattern '" + std::string(text) + "'");
  }
  return Pattern::path_union(internal::parse_count(text.substr(0, p), text),
                             internal::parse_count(text.substr(p + 1), text));
}

// Red side of a query must be a matching; returns t. "M1" is accepted as t=1.
inline int parse_matching_size(std::string_view text) {
  const Pattern p = parse_pattern(text);
  if (p.kind() == PatternKind::kMatching) return p.copies();
  if (text == "M1") return 1;
  throw PatternError("left side must be a matching M<t>, got '" +
                     std::string(text) + "'");
}

}  // namespace arrowkit

#endif  // ARROWKIT_PATTERN_HPP_
