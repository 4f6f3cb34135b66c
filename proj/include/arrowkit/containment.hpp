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

// Exact subgraph containment for the pattern kinds. All searches are
// backtracking over vertex masks, pruned by what is still reachable.

#ifndef ARROWKIT_CONTAINMENT_HPP_
#define ARROWKIT_CONTAINMENT_HPP_

#include <algorithm>
#include <cstdint>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "arrowkit/graph.hpp"
#include "arrowkit/pattern.hpp"

namespace arrowkit {

namespace internal {

class MatchingSolver {
 public:
  explicit MatchingSolver(const Graph& g) : g_(g) {}

  int solve(VertexMask alive) {
    VertexMask live = 0;
    for_each_vertex(alive, [&](int v) {
      if (g_.neighbors(v) & alive) live |= bit(v);
    });
    if (live == 0) return 0;
    if (const auto it = memo_.find(live); it != memo_.end()) return it->second;

    int pivot = -1;
    int pivot_degree = kMaxOrder + 1;
    for_each_vertex(live, [&](int v) {
      const int d = popcount(g_.neighbors(v) & live);
      if (d < pivot_degree) {
        pivot_degree = d;
        pivot = v;
      }
    });
    const VertexMask around = g_.neighbors(pivot) & live;
    int best = 0;
    if (pivot_degree == 1) {
      // A leaf is matched to its only neighbour in some maximum matching.
      best = 1 + solve(live & ~bit(pivot) & ~around);
    } else {
      const int bound = popcount(live) / 2;
      for_each_vertex(around, [&](int u) {
        if (best < bound) {
          best = std::max(best, 1 + solve(live & ~bit(pivot) & ~bit(u)));
        }
      });
      if (best < bound) best = std::max(best, solve(live & ~bit(pivot)));
    }
    memo_.emplace(live, best);
    return best;
  }

 private:
  const Graph& g_;
  std::unordered_map<VertexMask, int> memo_;
};

// Extends a simple path ending at `end` (already `length` vertices, using
// `used`) to `target` vertices inside `allowed`.
inline bool extend_path(const Graph& g, int end, VertexMask used, int length,
                        int target, VertexMask allowed) {
  if (length >= target) return true;
  const VertexMask free = allowed & ~used;
  bool found = false;
  for_each_vertex(g.neighbors(end) & free, [&](int w) {
    if (found) return;
    if (length + popcount(reach(g, w, free)) < target) return;
    found = extend_path(g, w, used | bit(w), length + 1, target, allowed);
  });
  return found;
}

inline bool has_path_within(const Graph& g, VertexMask allowed, int m) {
  if (m <= 0) return true;
  if (m == 1) return allowed != 0;
  for (const VertexMask comp : components(g, allowed)) {
    if (popcount(comp) < m) continue;
    bool found = false;
    for_each_vertex(comp, [&](int s) {
      if (!found) found = extend_path(g, s, bit(s), 1, m, comp);
    });
    if (found) return true;
  }
  return false;
}

// Cycle through `start` whose other vertices all exceed `start`.
// exact: length == target; otherwise length >= target.
inline bool close_cycle(const Graph& g, int start, int end, VertexMask used,
                        int length, int target, bool exact, VertexMask allowed) {
  if (length >= 3 && g.has_edge(end, start) &&
      (exact ? length == target : length >= target)) {
    return true;
  }
  if (exact && length >= target) return false;
  const VertexMask free = allowed & ~used;
  bool found = false;
  for_each_vertex(g.neighbors(end) & free, [&](int w) {
    if (found) return;
    const VertexMask r = reach(g, w, free);
    if ((r & g.neighbors(start)) == 0) return;
    if (length + popcount(r) < target) return;
    found = close_cycle(g, start, w, used | bit(w), length + 1, target, exact,
                        allowed);
  });
  return found;
}

inline bool has_cycle(const Graph& g, int target, bool exact) {
  if (target > g.order()) return false;
  for (int s = 0; s < g.order(); ++s) {
    const VertexMask allowed = g.vertices() & ~low_mask(s + 1);
    const VertexMask comp = reach(g, s, allowed | bit(s));
    if (popcount(comp) < target) continue;
    if (close_cycle(g, s, s, bit(s), 1, target, exact, comp)) return true;
  }
  return false;
}

inline std::uint64_t path_state_key(VertexMask mask, int left, int right) {
  return (std::uint64_t{mask} << 10) | (std::uint64_t(left) << 5) |
         std::uint64_t(right);
}

// Vertex sets of all m-vertex paths through `s` inside `allowed`, ascending.
inline std::vector<VertexMask> path_sets_through(const Graph& g,
                                                 VertexMask allowed, int s,
                                                 int m) {
  struct State {
    VertexMask mask;
    int left;
    int right;
  };
  std::vector<State> stack{{bit(s), s, s}};
  std::unordered_set<std::uint64_t> seen{path_state_key(bit(s), s, s)};
  std::vector<VertexMask> out;
  while (!stack.empty()) {
    const State st = stack.back();
    stack.pop_back();
    if (popcount(st.mask) == m) {
      out.push_back(st.mask);
      continue;
    }
    const VertexMask free = allowed & ~st.mask;
    auto push = [&](VertexMask mask, int left, int right) {
      if (seen.insert(path_state_key(mask, left, right)).second) {
        stack.push_back({mask, left, right});
      }
    };
    for_each_vertex(g.neighbors(st.right) & free,
                    [&](int w) { push(st.mask | bit(w), st.left, w); });
    for_each_vertex(g.neighbors(st.left) & free,
                    [&](int w) { push(st.mask | bit(w), w, st.right); });
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline int max_disjoint_paths(const Graph& g, VertexMask alive, int m, int cap);

// Branches on the lowest vertex of a connected piece: either it lies on one
// of the placed paths or it is unused.
inline int component_paths(const Graph& g, VertexMask comp, int m, int cap) {
  cap = std::min(cap, popcount(comp) / m);
  if (cap <= 0) return 0;
  if (!has_path_within(g, comp, m)) return 0;
  if (cap == 1) return 1;
  const int s = lowest(comp);
  int best = 0;
  for (const VertexMask placed : path_sets_through(g, comp, s, m)) {
    best = std::max(best, 1 + max_disjoint_paths(g, comp & ~placed, m, cap - 1));
    if (best >= cap) return cap;
  }
  return std::max(best, max_disjoint_paths(g, comp & ~bit(s), m, cap));
}

// min(cap, maximum number of vertex-disjoint m-vertex paths in g[alive]).
inline int max_disjoint_paths(const Graph& g, VertexMask alive, int m, int cap) {
  if (cap <= 0) return 0;
  int total = 0;
  for (const VertexMask comp : components(g, alive)) {
    if (popcount(comp) < m) continue;
    total += component_paths(g, comp, m, cap - total);
    if (total >= cap) return cap;
  }
  return total;
}

}  // namespace internal

// Maximum matching size nu(g); g contains tK2 iff nu(g) >= t.
inline int max_matching_size(const Graph& g) {
  return internal::MatchingSolver(g).solve(g.vertices());
}

// Simple path on m vertices.
inline bool contains_path(const Graph& g, int m) {
  return internal::has_path_within(g, g.vertices(), m);
}

// Cycle on exactly n vertices.
inline bool contains_cycle_exact(const Graph& g, int n) {
  if (n < 3) throw PatternError("cycle length must be >= 3");
  return internal::has_cycle(g, n, true);
}

inline bool contains_cycle_at_least(const Graph& g, int length) {
  if (length < 3) throw PatternError("cycle length must be >= 3");
  return internal::has_cycle(g, length, false);
}

// n vertex-disjoint paths on exactly m vertices each.
inline bool contains_path_union(const Graph& g, int n, int m) {
  if (n < 1 || m < 1) throw PatternError("path union needs n, m >= 1");
  if (n * m > g.order()) return false;
  if (n == 1) return contains_path(g, m);
  return internal::max_disjoint_paths(g, g.vertices(), m, n) >= n;
}

inline bool contains(const Graph& g, const Pattern& p) {
  switch (p.kind()) {
    case PatternKind::kMatching: return max_matching_size(g) >= p.copies();
    case PatternKind::kPath: return contains_path(g, p.length());
    case PatternKind::kCycle: return contains_cycle_exact(g, p.length());
    case PatternKind::kPathUnion:
      return contains_path_union(g, p.copies(), p.length());
  }
  return false;
}

}  // namespace arrowkit

#endif  // ARROWKIT_CONTAINMENT_HPP_
