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

#ifndef ARROWKIT_CONSTRUCTIONS_HPP_
#define ARROWKIT_CONSTRUCTIONS_HPP_

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cstdint>
#include <fstream>
#include <functional>
#include <optional>
#include <regex>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "arrowkit/arrowing.hpp"
#include "arrowkit/graph.hpp"
#include "arrowkit/graph6.hpp"
#include "arrowkit/parallel.hpp"
#include "arrowkit/pattern.hpp"

namespace arrowkit {

class FamilyError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct CycleFamily {
  int k = 0;
};
struct PathFamily {
  int m = 0;
};
struct PathUnionFamily {
  int n = 0;
  int m = 0;
};
// C_{nm+1}: arrows (2K2, nP_m) since every vertex deletion leaves P_{nm}.
struct LongCycleFamily {
  int n = 0;
  int m = 0;
};
// (n+1)P_m: arrows (2K2, nP_m) since a vertex deletion touches one copy.
struct SpareCopyFamily {
  int n = 0;
  int m = 0;
};
// C_k on 0..k-1 plus chords (non-edges of the cycle).
struct ChordedCycleFamily {
  int k = 0;
  std::vector<Edge> chords;
};
// base + ((t-3)/2) C_{m+1}, for odd t >= 3 and base -> (3K2, P_m).
struct OddMatchingFamily {
  int t = 0;
  int m = 0;
  Graph base;
};
// Connected parts joined by a bridge from vertex 0 of each part to vertex 0
// of the next.
struct BridgedFamily {
  std::vector<Graph> parts;
};

using FamilySpec =
    std::variant<CycleFamily, PathFamily, PathUnionFamily, LongCycleFamily,
                 SpareCopyFamily, ChordedCycleFamily, OddMatchingFamily, BridgedFamily>;

inline Graph chorded_cycle(int k, std::span<const Edge> chords) {
  Graph g = make_cycle(k);
  for (const auto& [a, b] : chords) {
    if (a < 0 || b < 0 || a >= k || b >= k || a == b) {
      throw FamilyError("chord (" + std::to_string(a) + "," + std::to_string(b) +
                        ") out of range");
    }
    if (g.has_edge(a, b)) {
      throw FamilyError("chord (" + std::to_string(a) + "," + std::to_string(b) +
                        ") is a cycle edge or repeated");
    }
    g.add_edge_unchecked(a, b);
  }
  return g;
}

inline Graph bridge_parts(std::span<const Graph> parts) {
  if (parts.empty()) throw FamilyError("bridged family needs at least one part");
  Graph out;
  int previous_root = -1;
  std::vector<Edge> bridges;
  for (const auto& part : parts) {
    if (part.order() == 0 || !is_connected(part)) {
      throw FamilyError("bridged parts must be non-empty and connected");
    }
    const int root = out.order();
    out = disjoint_union(out, part);
    if (previous_root >= 0) bridges.push_back({previous_root, root});
    previous_root = root;
  }
  for (const auto& [u, v] : bridges) out.add_edge_unchecked(u, v);
  return out;
}

// Components of (n+1)P_m, for deciding it when it exceeds the vertex cap.
inline std::vector<Graph> spare_copy_parts(int n, int m) {
  if (n < 1 || m < 1) throw FamilyError("spare-copy family needs n, m >= 1");
  return std::vector<Graph>(n + 1, make_path(m));
}

inline void check_odd_matching(const OddMatchingFamily& f) {
  if (f.t < 3 || f.t % 2 == 0) throw FamilyError("composition needs odd t >= 3");
  if (f.m < 3) throw FamilyError("composition needs m >= 3");
  if (!arrows(f.base, 3, Pattern::path(f.m)).arrows) {
    throw FamilyError("composition base does not arrow (3K2, P" +
                      std::to_string(f.m) + ")");
  }
}

inline Graph build_family(const FamilySpec& spec) {
  return std::visit(
      [](const auto& f) -> Graph {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, CycleFamily>) {
          return make_cycle(f.k);
        } else if constexpr (std::is_same_v<T, PathFamily>) {
          return make_path(f.m);
        } else if constexpr (std::is_same_v<T, PathUnionFamily>) {
          if (f.n < 1) throw FamilyError("path union needs n >= 1");
          return repeat_union(make_path(f.m), f.n);
        } else if constexpr (std::is_same_v<T, LongCycleFamily>) {
          if (f.n < 1 || f.m < 1) throw FamilyError("n, m must be >= 1");
          return make_cycle(f.n * f.m + 1);
        } else if constexpr (std::is_same_v<T, SpareCopyFamily>) {
          if (f.n < 1 || f.m < 1) throw FamilyError("n, m must be >= 1");
          return repeat_union(make_path(f.m), f.n + 1);
        } else if constexpr (std::is_same_v<T, ChordedCycleFamily>) {
          return chorded_cycle(f.k, f.chords);
        } else if constexpr (std::is_same_v<T, OddMatchingFamily>) {
          check_odd_matching(f);
          return disjoint_union(f.base, repeat_union(make_cycle(f.m + 1), (f.t - 3) / 2));
        } else {
          return bridge_parts(f.parts);
        }
      },
      spec);
}

// Arrowing verdict for base + ((t-3)/2) C_{m+1}, inferred from the parts.
inline ComposedArrowing compose_odd_matching(const OddMatchingFamily& f) {
  if (f.t < 3 || f.t % 2 == 0) throw FamilyError("composition needs odd t >= 3");
  const Pattern h = Pattern::path(f.m);
  std::vector<ArrowVerdict> parts{arrows(f.base, 3, h)};
  if (!parts.front().arrows) {
    throw FamilyError("composition base does not arrow (3K2, P_m)");
  }
  const ArrowVerdict cycle = arrows(make_cycle(f.m + 1), 2, h);
  for (int i = 0; i < (f.t - 3) / 2; ++i) parts.push_back(cycle);
  return compose_union_arrowing(parts);
}

// Parts of the connected variant: the base and each C_{m+1}.
inline std::vector<Graph> odd_matching_parts(const OddMatchingFamily& f) {
  std::vector<Graph> parts{f.base};
  for (int i = 0; i < (f.t - 3) / 2; ++i) parts.push_back(make_cycle(f.m + 1));
  return parts;
}

namespace internal {

inline std::string trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return std::string(s);
}

inline int to_int(std::string_view s, std::string_view whole) {
  const std::string t = trim(s);
  if (t.empty() || !std::all_of(t.begin(), t.end(), [](char c) {
        return std::isdigit(static_cast<unsigned char>(c));
      })) {
    throw FamilyError("malformed family spec '" + std::string(whole) + "'");
  }
  return std::stoi(t);
}

inline std::vector<int> int_list(std::string_view s, std::string_view whole) {
  std::vector<int> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    const auto comma = s.find(',', start);
    const auto end = comma == std::string_view::npos ? s.size() : comma;
    out.push_back(to_int(s.substr(start, end - start), whole));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

inline Graph load_graph_ref(std::string_view ref) {
  if (ref.starts_with("@")) {
    const std::string path(ref.substr(1));
    std::ifstream in(path);
    if (!in) throw FamilyError("cannot open graph file '" + path + "'");
    const auto graphs = read_graph6_lines(in);
    if (graphs.empty()) throw FamilyError("no graph in '" + path + "'");
    return graphs.front();
  }
  return decode_graph6(ref);
}

}  // namespace internal

// Family mini-language:
//   cycle:k  path:m  paths:n,m  fig1a:n,m  fig1b:n,m
//   chorded:k+{(a,b),(c,d)}     compose43:t=5,m=9,base=<graph6|@file>
//   bridged:<family>            (bridges the components of the inner graph)
inline FamilySpec parse_family(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw FamilyError("family spec '" + std::string(text) + "' lacks ':'");
  }
  const std::string kind = internal::trim(text.substr(0, colon));
  const std::string_view args = text.substr(colon + 1);
  auto pair_args = [&] {
    const auto v = internal::int_list(args, text);
    if (v.size() != 2) throw FamilyError("expected two numbers in '" + std::string(text) + "'");
    return v;
  };
  if (kind == "cycle") return CycleFamily{internal::to_int(args, text)};
  if (kind == "path") return PathFamily{internal::to_int(args, text)};
  if (kind == "paths") {
    const auto v = pair_args();
    return PathUnionFamily{v[0], v[1]};
  }
  if (kind == "fig1a") {
    const auto v = pair_args();
    return LongCycleFamily{v[0], v[1]};
  }
  if (kind == "fig1b") {
    const auto v = pair_args();
    return SpareCopyFamily{v[0], v[1]};
  }
  if (kind == "chorded") {
    const auto plus = args.find('+');
    ChordedCycleFamily f;
    f.k = internal::to_int(args.substr(0, plus), text);
    if (plus != std::string_view::npos) {
      std::string body;
      for (const char c : args.substr(plus + 1)) {
        if (!std::isspace(static_cast<unsigned char>(c))) body.push_back(c);
      }
      static const std::regex kBody(R"(\{(\(\d+,\d+\)(,\(\d+,\d+\))*)?\})");
      if (!std::regex_match(body, kBody)) {
        throw FamilyError("chords must look like {(a,b),(c,d)} in '" + std::string(text) + "'");
      }
      static const std::regex kPair(R"(\((\d+),(\d+)\))");
      for (auto it = std::sregex_iterator(body.begin(), body.end(), kPair);
           it != std::sregex_iterator(); ++it) {
        f.chords.push_back(make_edge(internal::to_int((*it)[1].str(), text),
                                     internal::to_int((*it)[2].str(), text)));
      }
    }
    return f;
  }
  if (kind == "compose43") {
    OddMatchingFamily f;
    std::optional<Graph> base;
    std::size_t start = 0;
    while (start < args.size()) {
      const auto comma = args.find(',', start);
      const auto end = comma == std::string_view::npos ? args.size() : comma;
      const std::string item = internal::trim(args.substr(start, end - start));
      const auto eq = item.find('=');
      if (eq == std::string::npos) throw FamilyError("expected key=value in '" + item + "'");
      const std::string key = item.substr(0, eq);
      const std::string value = item.substr(eq + 1);
      if (key == "t") {
        f.t = internal::to_int(value, text);
      } else if (key == "m") {
        f.m = internal::to_int(value, text);
      } else if (key == "base") {
        base = internal::load_graph_ref(value);
      } else {
        throw FamilyError("unknown compose43 key '" + key + "'");
      }
      start = end + 1;
    }
    if (!base) throw FamilyError("compose43 needs base=");
    f.base = *base;
    return f;
  }
  if (kind == "bridged") {
    const Graph inner = build_family(parse_family(args));
    BridgedFamily f;
    for (const VertexMask comp : components(inner)) {
      f.parts.push_back(induced_subgraph(inner, comp));
    }
    return f;
  }
  throw FamilyError("unknown family '" + kind + "'");
}

// ---------------------------------------------------------------------------
// Property-driven witness search over cycles with a few chords.

using WitnessChecker = std::function<std::optional<ArrowVerdict>(const Graph&)>;

// Positive iff the host passes the girth filter and arrows (tK2, h).
inline WitnessChecker arrowing_checker(int t, Pattern h,
                                       std::optional<int> girth_at_least = {}) {
  return [t, h, girth_at_least](const Graph& g) -> std::optional<ArrowVerdict> {
    if (girth_at_least && !arrowkit::girth_at_least(g, *girth_at_least)) {
      return std::nullopt;
    }
    ArrowVerdict v = arrows(g, t, h);
    if (!v.arrows) return std::nullopt;
    return v;
  };
}

struct ChordScan {
  int cycle_length = 0;
  int chords = 0;
  std::int64_t placements = 0;       // all chord sets
  std::int64_t representatives = 0;  // after dihedral reduction
};

struct WitnessSearchResult {
  int size = 0;
  std::optional<Graph> graph;
  std::optional<ArrowVerdict> verdict;
  std::optional<ChordedCycleFamily> family;
  std::vector<ChordScan> scans;

  bool found() const { return graph.has_value(); }
  std::int64_t representatives() const {
    std::int64_t n = 0;
    for (const auto& s : scans) n += s.representatives;
    return n;
  }
};

namespace internal {

inline std::vector<Edge> dihedral_image(std::span<const Edge> chords, int k,
                                        int shift, bool reflect) {
  std::vector<Edge> out;
  out.reserve(chords.size());
  for (const auto& [a, b] : chords) {
    const int x = reflect ? (k - a + shift) % k : (a + shift) % k;
    const int y = reflect ? (k - b + shift) % k : (b + shift) % k;
    out.push_back(make_edge(x, y));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// True iff `chords` (sorted) is the lexicographically smallest image of
// itself under rotations and reflections of C_k.
inline bool dihedral_minimal(std::span<const Edge> chords, int k) {
  for (int shift = 0; shift < k; ++shift) {
    for (const bool reflect : {false, true}) {
      if (!reflect && shift == 0) continue;
      const auto image = dihedral_image(chords, k, shift, reflect);
      if (std::lexicographical_compare(image.begin(), image.end(), chords.begin(),
                                       chords.end())) {
        return false;
      }
    }
  }
  return true;
}

inline void for_each_combination(int n, int r, const std::function<void(const std::vector<int>&)>& f) {
  if (r > n) return;
  std::vector<int> idx(r);
  for (int i = 0; i < r; ++i) idx[i] = i;
  while (true) {
    f(idx);
    int i = r - 1;
    while (i >= 0 && idx[i] == n - r + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace internal

// Scans C_k plus c chords with k + c = size for c in [min_chords, max_chords],
// chord sets up to the dihedral symmetry of the cycle, in ascending c and
// then lexicographic chord order. Returns the first host the checker accepts.
inline WitnessSearchResult witness_search(int size, int min_chords, int max_chords,
                                          const WitnessChecker& checker) {
  if (min_chords < 0 || max_chords > 4 || min_chords > max_chords) {
    throw FamilyError("chord count range must lie within [0, 4]");
  }
  WitnessSearchResult result;
  result.size = size;
  for (int c = min_chords; c <= max_chords; ++c) {
    const int k = size - c;
    if (k < 3 || k > kMaxOrder) continue;
    std::vector<Edge> slots;
    for (int a = 0; a < k; ++a) {
      for (int b = a + 2; b < k; ++b) {
        if (!(a == 0 && b == k - 1)) slots.push_back({a, b});
      }
    }
    ChordScan scan{k, c, 0, 0};
    std::vector<std::vector<Edge>> reps;
    internal::for_each_combination(static_cast<int>(slots.size()), c,
                                   [&](const std::vector<int>& idx) {
      ++scan.placements;
      std::vector<Edge> chords;
      for (const int i : idx) chords.push_back(slots[i]);
      if (internal::dihedral_minimal(chords, k)) reps.push_back(std::move(chords));
    });
    scan.representatives = static_cast<std::int64_t>(reps.size());
    result.scans.push_back(scan);

    std::atomic<std::size_t> first_hit{reps.size()};
    std::vector<std::optional<ArrowVerdict>> verdicts(reps.size());
    parallel_for(reps.size(), [&](std::size_t i) {
      if (i > first_hit.load()) return;
      verdicts[i] = checker(chorded_cycle(k, reps[i]));
      if (verdicts[i]) {
        std::size_t cur = first_hit.load();
        while (i < cur && !first_hit.compare_exchange_weak(cur, i)) {
        }
      }
    });
    if (first_hit < reps.size()) {
      const std::size_t i = first_hit;
      result.family = ChordedCycleFamily{k, reps[i]};
      result.graph = chorded_cycle(k, reps[i]);
      result.verdict = verdicts[i];
      return result;
    }
  }
  return result;
}

inline std::string chorded_spec_string(const ChordedCycleFamily& f) {
  std::string s = "chorded:" + std::to_string(f.k) + "+{";
  for (std::size_t i = 0; i < f.chords.size(); ++i) {
    if (i) s += ",";
    s += "(" + std::to_string(f.chords[i].first) + "," +
         std::to_string(f.chords[i].second) + ")";
  }
  return s + "}";
}

}  // namespace arrowkit

#endif  // ARROWKIT_CONSTRUCTIONS_HPP_
