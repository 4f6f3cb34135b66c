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

// Isomorph-free generation of graphs without isolated vertices, one edge at
// a time, by canonical augmentation. A child G' obtained from parent P by
// adding edge e is kept iff e lies in the Aut(G')-orbit of the canonical last
// edge of G'; every class therefore has exactly one accepted parent class,
// and siblings from the same parent are deduplicated by canonical code.

#ifndef ARROWKIT_ENUMERATION_HPP_
#define ARROWKIT_ENUMERATION_HPP_

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "arrowkit/arrowing.hpp"
#include "arrowkit/canonical.hpp"
#include "arrowkit/containment.hpp"
#include "arrowkit/graph.hpp"
#include "arrowkit/parallel.hpp"
#include "arrowkit/pattern.hpp"

namespace arrowkit {

inline constexpr int kDefaultEnumBudget = 9;
inline constexpr int kMaxEnumBudget = 11;

struct EnumConstraints {
  int edges = 0;
  bool connected = false;
  std::optional<int> min_degree;
  std::optional<int> max_order;
  std::optional<int> girth_at_least;
  // Every component must contain this pattern. Only sound where the caller
  // has shown components without it are irrelevant.
  std::optional<Pattern> component_contains;

  std::string describe() const {
    std::string s = "edges=" + std::to_string(edges);
    if (connected) s += " connected";
    if (min_degree) s += " min_degree>=" + std::to_string(*min_degree);
    if (max_order) s += " max_order<=" + std::to_string(*max_order);
    if (girth_at_least) s += " girth>=" + std::to_string(*girth_at_least);
    if (component_contains) {
      s += " components_contain=" + component_contains->to_string();
    }
    return s;
  }
};

struct EnumOptions {
  int budget = kDefaultEnumBudget;
};

class EnumerationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Constraints preserved under edge deletion; they prune the whole tree.
struct HereditaryLimits {
  std::optional<int> max_order;
  std::optional<int> girth_at_least;

  bool admits(const Graph& g) const {
    if (max_order && g.order() > *max_order) return false;
    if (girth_at_least && !arrowkit::girth_at_least(g, *girth_at_least)) return false;
    return true;
  }

  friend bool operator==(const HereditaryLimits&, const HereditaryLimits&) = default;
};

inline bool satisfies(const Graph& g, const EnumConstraints& c) {
  if (g.edge_count() != c.edges) return false;
  if (isolated_vertices(g) != 0) return false;
  if (c.connected && !is_connected(g)) return false;
  if (c.min_degree && min_degree(g) < *c.min_degree) return false;
  if (c.max_order && g.order() > *c.max_order) return false;
  if (c.girth_at_least && !girth_at_least(g, *c.girth_at_least)) return false;
  if (c.component_contains) {
    for (const VertexMask comp : components(g)) {
      if (!contains(induced_subgraph(g, comp), *c.component_contains)) return false;
    }
  }
  return true;
}

namespace internal {

struct CodedGraph {
  CanonicalCode code;
  Graph graph;
};

// Children of one parent that pass the canonical-parent test.
inline std::vector<CodedGraph> augment(const Graph& parent,
                                       const HereditaryLimits& limits) {
  const int n = parent.order();
  std::vector<std::pair<int, Edge>> additions;  // (new vertices, edge)
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (!parent.has_edge(u, v)) additions.push_back({0, {u, v}});
    }
  }
  for (int u = 0; u < n; ++u) additions.push_back({1, {u, n}});
  additions.push_back({2, {n, n + 1}});

  std::vector<CodedGraph> out;
  std::set<CanonicalCode> seen;
  for (const auto& [extra, e] : additions) {
    if (n + extra > kMaxOrder) continue;
    Graph child = parent.with_isolated(extra);
    child.add_edge_unchecked(e.first, e.second);
    if (!limits.admits(child)) continue;

    CanonicalLabeling lab = canonical_labeling(child);
    // Canonical last edge: the edge with the largest canonical endpoint
    // labels (larger label first).
    Edge last{-1, -1};
    std::pair<int, int> last_key{-1, -1};
    for (const auto& [a, b] : child.edges()) {
      const std::pair<int, int> key{std::max(lab.label[a], lab.label[b]),
                                    std::min(lab.label[a], lab.label[b])};
      if (key > last_key) {
        last_key = key;
        last = {a, b};
      }
    }
    const auto orbit = edge_orbit(last, lab.automorphisms);
    if (std::find(orbit.begin(), orbit.end(), e) == orbit.end()) continue;
    if (!seen.insert(lab.code).second) continue;
    out.push_back({lab.code, relabel(child, lab.label)});
  }
  return out;
}

}  // namespace internal

// Levels of the augmentation tree, grown lazily. Level k holds one canonical
// representative per class with k edges, sorted by canonical code.
class EnumerationTree {
 public:
  explicit EnumerationTree(HereditaryLimits limits = {}) : limits_(limits) {
    levels_.push_back({{canonical_form(Graph()), Graph()}});
  }

  const HereditaryLimits& limits() const { return limits_; }

  std::vector<Graph> level(int edges) {
    grow_to(edges);
    std::vector<Graph> out;
    out.reserve(levels_[edges].size());
    for (const auto& cg : levels_[edges]) out.push_back(cg.graph);
    return out;
  }

  std::size_t level_size(int edges) {
    grow_to(edges);
    return levels_[edges].size();
  }

 private:
  void grow_to(int edges) {
    while (static_cast<int>(levels_.size()) <= edges) {
      const auto& parents = levels_.back();
      std::vector<std::vector<internal::CodedGraph>> children(parents.size());
      parallel_for(parents.size(), [&](std::size_t i) {
        children[i] = internal::augment(parents[i].graph, limits_);
      });
      std::vector<internal::CodedGraph> next;
      for (auto& batch : children) {
        for (auto& cg : batch) next.push_back(std::move(cg));
      }
      std::sort(next.begin(), next.end(),
                [](const auto& a, const auto& b) { return a.code < b.code; });
      levels_.push_back(std::move(next));
    }
  }

  HereditaryLimits limits_;
  std::vector<std::vector<internal::CodedGraph>> levels_;
};

inline void check_enum_request(const EnumConstraints& c, const EnumOptions& o) {
  if (c.edges < 0) throw EnumerationError("edge count must be >= 0");
  if (o.budget > kMaxEnumBudget) {
    throw BudgetExceeded("enumeration budget is capped at " +
                         std::to_string(kMaxEnumBudget) + " edges");
  }
  if (c.edges > o.budget) {
    throw BudgetExceeded("enumeration of " + std::to_string(c.edges) +
                         " edges exceeds the budget of " + std::to_string(o.budget) +
                         " (raise it explicitly, up to " +
                         std::to_string(kMaxEnumBudget) + ")");
  }
  if (c.max_order && *c.max_order > 2 * c.edges) {
    throw EnumerationError("max_order cannot exceed 2 * edges");
  }
}

inline HereditaryLimits hereditary_part(const EnumConstraints& c) {
  return HereditaryLimits{c.max_order, c.girth_at_least};
}

// Filters one level of `tree` by the full constraint set.
inline std::vector<Graph> select_level(EnumerationTree& tree, const EnumConstraints& c) {
  std::vector<Graph> level = tree.level(c.edges);
  std::vector<char> keep(level.size(), 0);
  parallel_for(level.size(), [&](std::size_t i) { keep[i] = satisfies(level[i], c); });
  std::vector<Graph> out;
  for (std::size_t i = 0; i < level.size(); ++i) {
    if (keep[i]) out.push_back(std::move(level[i]));
  }
  return out;
}

inline std::vector<Graph> enumerate_graphs(const EnumConstraints& c,
                                           const EnumOptions& o = {}) {
  check_enum_request(c, o);
  EnumerationTree tree(hereditary_part(c));
  return select_level(tree, c);
}

inline std::int64_t count_graphs(const EnumConstraints& c, const EnumOptions& o = {}) {
  return static_cast<std::int64_t>(enumerate_graphs(c, o).size());
}

}  // namespace arrowkit

#endif  // ARROWKIT_ENUMERATION_HPP_
