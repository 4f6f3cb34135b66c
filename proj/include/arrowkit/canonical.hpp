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

// Canonical labeling by equitable partition refinement and individualization,
// in the style of nauty: the canonical form is the lexicographically largest
// relabeled adjacency matrix over the leaves of the search tree. Subtrees are
// pruned only when a discovered automorphism maps them onto a subtree already
// explored, so the automorphisms collected during the search generate the
// full automorphism group.

#ifndef ARROWKIT_CANONICAL_HPP_
#define ARROWKIT_CANONICAL_HPP_

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <numeric>
#include <span>
#include <vector>

#include "arrowkit/graph.hpp"

namespace arrowkit {

struct CanonicalCode {
  std::vector<std::uint8_t> bytes;
  int order = 0;
  int edge_count = 0;

  friend bool operator==(const CanonicalCode&, const CanonicalCode&) = default;
  friend auto operator<=>(const CanonicalCode& a, const CanonicalCode& b) {
    return a.bytes <=> b.bytes;
  }
};

using Permutation = std::vector<int>;

struct CanonicalLabeling {
  // label[v] is the canonical position of vertex v.
  Permutation label;
  CanonicalCode code;
  // Generators of Aut(g) (respecting the vertex coloring), as vertex maps.
  std::vector<Permutation> automorphisms;
};

namespace internal {

// Ordered partition of the vertex set; cells are vertex masks.
struct Partition {
  std::array<VertexMask, kMaxOrder> cell{};
  int size = 0;

  bool discrete(int order) const { return size == order; }
};

// Splits cells by neighbour counts into splitter cells until equitable.
// Sub-cells replace their parent in ascending count order, so the result
// depends only on the graph structure and the input cell order.
inline void refine(const Graph& g, Partition& p) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (int s = 0; s < p.size && !changed; ++s) {
      const VertexMask splitter = p.cell[s];
      for (int c = 0; c < p.size; ++c) {
        const VertexMask cell = p.cell[c];
        if (popcount(cell) < 2) continue;
        std::array<VertexMask, kMaxOrder + 1> by_count{};
        int lo = kMaxOrder + 1;
        int hi = -1;
        for_each_vertex(cell, [&](int v) {
          const int k = popcount(g.neighbors(v) & splitter);
          by_count[k] |= bit(v);
          lo = std::min(lo, k);
          hi = std::max(hi, k);
        });
        if (lo == hi) continue;
        std::array<VertexMask, kMaxOrder> parts{};
        int n_parts = 0;
        for (int k = lo; k <= hi; ++k) {
          if (by_count[k] != 0) parts[n_parts++] = by_count[k];
        }
        for (int i = p.size - 1; i > c; --i) p.cell[i + n_parts - 1] = p.cell[i];
        for (int i = 0; i < n_parts; ++i) p.cell[c + i] = parts[i];
        p.size += n_parts - 1;
        changed = true;
        break;
      }
    }
  }
}

inline Partition individualize(const Partition& p, int cell_index, int v) {
  Partition out = p;
  for (int i = p.size - 1; i > cell_index; --i) out.cell[i + 1] = p.cell[i];
  out.cell[cell_index] = bit(v);
  out.cell[cell_index + 1] = p.cell[cell_index] & ~bit(v);
  ++out.size;
  return out;
}

struct Leaf {
  std::array<int, kMaxOrder> vertex_at{};  // canonical position -> vertex
  std::array<VertexMask, kMaxOrder> rows{};
  std::vector<int> path;
};

class CanonicalSearch {
 public:
  CanonicalSearch(const Graph& g, std::span<const int> colors)
      : g_(g), colors_(colors.begin(), colors.end()) {}

  CanonicalLabeling run() {
    Partition root;
    const int n = g_.order();
    if (n > 0) {
      if (colors_.empty()) {
        root.cell[0] = g_.vertices();
        root.size = 1;
      } else {
        std::vector<int> distinct(colors_.begin(), colors_.end());
        std::sort(distinct.begin(), distinct.end());
        distinct.erase(std::unique(distinct.begin(), distinct.end()),
                       distinct.end());
        for (const int c : distinct) {
          VertexMask m = 0;
          for (int v = 0; v < n; ++v) {
            if (colors_[v] == c) m |= bit(v);
          }
          root.cell[root.size++] = m;
        }
      }
      refine(g_, root);
    }
    std::vector<int> path;
    search(root, path);
    return finish();
  }

 private:
  // Returns the tree level that should resume exploring, or -1.
  int search(const Partition& p, std::vector<int>& path) {
    const int n = g_.order();
    const int level = static_cast<int>(path.size());
    if (p.discrete(n)) return visit_leaf(p, path);

    int target = 0;
    while (popcount(p.cell[target]) < 2) ++target;
    std::vector<int> done;
    const VertexMask cell = p.cell[target];
    for (int v = 0; v < n; ++v) {
      if (((cell >> v) & 1U) == 0) continue;
      if (!done.empty() && !automorphisms_.empty() &&
          equivalent_to_any(v, done, path)) {
        continue;
      }
      Partition child = individualize(p, target, v);
      refine(g_, child);
      path.push_back(v);
      const int resume = search(child, path);
      path.pop_back();
      done.push_back(v);
      if (resume >= 0 && resume < level) return resume;
    }
    return -1;
  }

  // v shares an orbit with a finished sibling under the automorphisms found
  // so far that fix every vertex of `path`.
  bool equivalent_to_any(int v, const std::vector<int>& done,
                         const std::vector<int>& path) const {
    const int n = g_.order();
    std::array<int, kMaxOrder> root{};
    std::iota(root.begin(), root.begin() + n, 0);
    auto find = [&](int x) {
      while (root[x] != x) x = root[x] = root[root[x]];
      return x;
    };
    for (const auto& a : automorphisms_) {
      bool fixes = true;
      for (const int w : path) {
        if (a[w] != w) {
          fixes = false;
          break;
        }
      }
      if (!fixes) continue;
      for (int x = 0; x < n; ++x) {
        const int rx = find(x);
        const int ry = find(a[x]);
        if (rx != ry) root[std::max(rx, ry)] = std::min(rx, ry);
      }
    }
    const int rv = find(v);
    return std::any_of(done.begin(), done.end(),
                       [&](int w) { return find(w) == rv; });
  }

  Leaf make_leaf(const Partition& p, const std::vector<int>& path) const {
    Leaf leaf;
    const int n = g_.order();
    std::array<int, kMaxOrder> position{};
    for (int i = 0; i < n; ++i) {
      const int v = lowest(p.cell[i]);
      leaf.vertex_at[i] = v;
      position[v] = i;
    }
    for (int i = 0; i < n; ++i) {
      VertexMask row = 0;
      for_each_vertex(g_.neighbors(leaf.vertex_at[i]),
                      [&](int w) { row |= bit(position[w]); });
      leaf.rows[i] = row;
    }
    leaf.path = path;
    return leaf;
  }

  int compare_rows(const Leaf& a, const Leaf& b) const {
    for (int i = 0; i < g_.order(); ++i) {
      if (a.rows[i] != b.rows[i]) return a.rows[i] < b.rows[i] ? -1 : 1;
    }
    return 0;
  }

  static int common_prefix(const std::vector<int>& a, const std::vector<int>& b) {
    int k = 0;
    while (k < static_cast<int>(a.size()) && k < static_cast<int>(b.size()) &&
           a[k] == b[k]) {
      ++k;
    }
    return k;
  }

  Permutation automorphism_between(const Leaf& from, const Leaf& to) const {
    Permutation a(g_.order());
    for (int i = 0; i < g_.order(); ++i) a[from.vertex_at[i]] = to.vertex_at[i];
    return a;
  }

  int visit_leaf(const Partition& p, const std::vector<int>& path) {
    Leaf leaf = make_leaf(p, path);
    if (!have_first_) {
      first_ = leaf;
      best_ = std::move(leaf);
      have_first_ = true;
      return -1;
    }
    if (compare_rows(leaf, first_) == 0) {
      automorphisms_.push_back(automorphism_between(first_, leaf));
      return common_prefix(path, first_.path);
    }
    const int cmp = compare_rows(leaf, best_);
    if (cmp == 0) {
      automorphisms_.push_back(automorphism_between(best_, leaf));
      return common_prefix(path, best_.path);
    }
    if (cmp > 0) best_ = std::move(leaf);
    return -1;
  }

  CanonicalLabeling finish() const {
    const int n = g_.order();
    CanonicalLabeling out;
    out.label.assign(n, 0);
    for (int i = 0; i < n; ++i) out.label[best_.vertex_at[i]] = i;
    out.code.order = n;
    out.code.edge_count = g_.edge_count();
    auto& bytes = out.code.bytes;
    bytes.push_back(static_cast<std::uint8_t>(n));
    if (!colors_.empty()) {
      for (int i = 0; i < n; ++i) {
        const auto c = static_cast<std::uint32_t>(colors_[best_.vertex_at[i]]);
        for (int s = 24; s >= 0; s -= 8) bytes.push_back((c >> s) & 0xFFU);
      }
    }
    for (int i = 0; i < n; ++i) {
      for (int s = 24; s >= 0; s -= 8) {
        bytes.push_back(static_cast<std::uint8_t>((best_.rows[i] >> s) & 0xFFU));
      }
    }
    out.automorphisms = automorphisms_;
    return out;
  }

  const Graph& g_;
  std::vector<int> colors_;
  std::vector<Permutation> automorphisms_;
  Leaf first_;
  Leaf best_;
  bool have_first_ = false;
};

}  // namespace internal

// `colors` (optional) assigns each vertex a colour that automorphisms must
// preserve; the colour sequence is part of the code.
inline CanonicalLabeling canonical_labeling(const Graph& g,
                                            std::span<const int> colors = {}) {
  if (!colors.empty() && static_cast<int>(colors.size()) != g.order()) {
    throw GraphError("colour vector length does not match graph order");
  }
  return internal::CanonicalSearch(g, colors).run();
}

inline CanonicalCode canonical_form(const Graph& g) {
  return canonical_labeling(g).code;
}

inline Graph canonical_graph(const Graph& g) {
  return relabel(g, canonical_labeling(g).label);
}

inline bool isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  return canonical_form(a) == canonical_form(b);
}

// Orbit of `e` under the group generated by `generators`.
inline std::vector<Edge> edge_orbit(const Edge& e,
                                    std::span<const Permutation> generators) {
  std::vector<Edge> orbit{make_edge(e.first, e.second)};
  for (std::size_t i = 0; i < orbit.size(); ++i) {
    for (const auto& a : generators) {
      const Edge image = make_edge(a[orbit[i].first], a[orbit[i].second]);
      if (std::find(orbit.begin(), orbit.end(), image) == orbit.end()) {
        orbit.push_back(image);
      }
    }
  }
  return orbit;
}

}  // namespace arrowkit

#endif  // ARROWKIT_CANONICAL_HPP_
