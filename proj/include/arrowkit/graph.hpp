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

#ifndef ARROWKIT_GRAPH_HPP_
#define ARROWKIT_GRAPH_HPP_

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace arrowkit {

inline constexpr int kMaxOrder = 32;

// Bit v set <=> vertex v is a member.
using VertexMask = std::uint32_t;

// Undirected edge, always stored with first < second.
using Edge = std::pair<int, int>;

inline constexpr VertexMask bit(int v) { return VertexMask{1} << v; }

inline constexpr VertexMask low_mask(int n) {
  return n >= kMaxOrder ? ~VertexMask{0} : (VertexMask{1} << n) - 1;
}

inline int popcount(VertexMask m) { return std::popcount(m); }

inline int lowest(VertexMask m) { return std::countr_zero(m); }

// Calls f(v) for each member of `m` in ascending order.
template <typename F>
void for_each_vertex(VertexMask m, F&& f) {
  while (m != 0) {
    f(std::countr_zero(m));
    m &= m - 1;
  }
}

inline Edge make_edge(int u, int v) { return u < v ? Edge{u, v} : Edge{v, u}; }

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Simple undirected graph on at most 32 vertices. Value type; every
// operation below returns a new graph.
class Graph {
 public:
  Graph() = default;

  explicit Graph(int order) : order_(order) {
    if (order < 0 || order > kMaxOrder) {
      throw GraphError("graph order " + std::to_string(order) +
                       " outside [0, 32]");
    }
  }

  int order() const { return order_; }
  int edge_count() const { return edge_count_; }
  VertexMask vertices() const { return low_mask(order_); }
  VertexMask neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return popcount(adj_[v]); }
  bool has_edge(int u, int v) const { return (adj_[u] >> v) & 1U; }

  // Edges in ascending (u, v) order with u < v.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (int u = 0; u < order_; ++u) {
      for_each_vertex(adj_[u] & ~low_mask(u + 1),
                      [&](int v) { out.emplace_back(u, v); });
    }
    return out;
  }

  // Unchecked mutators for builders that already validated their input.
  void add_edge_unchecked(int u, int v) {
    if (has_edge(u, v)) return;
    adj_[u] |= bit(v);
    adj_[v] |= bit(u);
    ++edge_count_;
  }

  void remove_edge_unchecked(int u, int v) {
    if (!has_edge(u, v)) return;
    adj_[u] &= ~bit(v);
    adj_[v] &= ~bit(u);
    --edge_count_;
  }

  Graph with_edge(int u, int v) const {
    check_pair(u, v);
    Graph g = *this;
    g.add_edge_unchecked(u, v);
    return g;
  }

  Graph without_edge(int u, int v) const {
    check_pair(u, v);
    Graph g = *this;
    g.remove_edge_unchecked(u, v);
    return g;
  }

  // Same graph with `extra` isolated vertices appended.
  Graph with_isolated(int extra) const {
    Graph g(order_ + extra);
    g.adj_ = adj_;
    g.edge_count_ = edge_count_;
    return g;
  }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_pair(int u, int v) const {
    if (u < 0 || v < 0 || u >= order_ || v >= order_) {
      throw GraphError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                       ") out of range for order " + std::to_string(order_));
    }
    if (u == v) throw GraphError("loop at vertex " + std::to_string(u));
  }

  int order_ = 0;
  int edge_count_ = 0;
  std::array<VertexMask, kMaxOrder> adj_{};
};

// Duplicate pairs (in either orientation) collapse to one edge.
inline Graph graph_from_edges(int order, std::span<const Edge> edges) {
  Graph g(order);
  for (const auto& [u, v] : edges) g = g.with_edge(u, v);
  return g;
}

inline Graph graph_from_edges(int order, std::initializer_list<Edge> edges) {
  return graph_from_edges(order, std::span<const Edge>(edges.begin(), edges.size()));
}

// Induced subgraph on `keep`; survivors are renumbered contiguously in
// ascending order of their original index.
inline Graph induced_subgraph(const Graph& g, VertexMask keep) {
  keep &= g.vertices();
  std::array<int, kMaxOrder> index{};
  int next = 0;
  for_each_vertex(keep, [&](int v) { index[v] = next++; });
  Graph out(next);
  for_each_vertex(keep, [&](int u) {
    for_each_vertex(g.neighbors(u) & keep & ~low_mask(u + 1),
                    [&](int v) { out.add_edge_unchecked(index[u], index[v]); });
  });
  return out;
}

inline Graph delete_vertices(const Graph& g, VertexMask removed) {
  if ((removed & ~g.vertices()) != 0) {
    throw GraphError("deleted vertex set is not a subset of V(g)");
  }
  return induced_subgraph(g, g.vertices() & ~removed);
}

inline Graph delete_edges(const Graph& g, std::span<const Edge> edges) {
  Graph out = g;
  for (const auto& [u, v] : edges) out = out.without_edge(u, v);
  return out;
}

// Number of edges with at least one endpoint in `s`.
inline int edges_meeting(const Graph& g, VertexMask s) {
  int count = 0;
  for (const auto& [u, v] : g.edges()) {
    if (((s >> u) & 1U) || ((s >> v) & 1U)) ++count;
  }
  return count;
}

inline VertexMask isolated_vertices(const Graph& g) {
  VertexMask out = 0;
  for (int v = 0; v < g.order(); ++v) {
    if (g.neighbors(v) == 0) out |= bit(v);
  }
  return out;
}

inline Graph remove_isolated(const Graph& g) {
  return induced_subgraph(g, g.vertices() & ~isolated_vertices(g));
}

// perm[v] is the new label of vertex v.
inline Graph relabel(const Graph& g, std::span<const int> perm) {
  Graph out(g.order());
  for (const auto& [u, v] : g.edges()) out.add_edge_unchecked(perm[u], perm[v]);
  return out;
}

// `b` is appended after `a`: its vertex i becomes a.order() + i.
inline Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph out = a.with_isolated(b.order());
  for (const auto& [u, v] : b.edges()) {
    out.add_edge_unchecked(a.order() + u, a.order() + v);
  }
  return out;
}

// Vertices reachable from `start` inside `allowed` (start included).
inline VertexMask reach(const Graph& g, int start, VertexMask allowed) {
  VertexMask seen = bit(start);
  VertexMask frontier = seen;
  while (frontier != 0) {
    VertexMask next = 0;
    for_each_vertex(frontier, [&](int v) { next |= g.neighbors(v); });
    next &= allowed & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

// Connected components of g restricted to `within`, ordered by lowest vertex.
inline std::vector<VertexMask> components(const Graph& g, VertexMask within) {
  std::vector<VertexMask> out;
  VertexMask left = within & g.vertices();
  while (left != 0) {
    VertexMask c = reach(g, lowest(left), left);
    out.push_back(c);
    left &= ~c;
  }
  return out;
}

inline std::vector<VertexMask> components(const Graph& g) {
  return components(g, g.vertices());
}

// The empty graph (order 0) and K1 count as connected.
inline bool is_connected(const Graph& g) { return components(g).size() <= 1; }

// Each triangle once, as ascending vertex triples in ascending order.
inline std::vector<std::array<int, 3>> triangles(const Graph& g) {
  std::vector<std::array<int, 3>> out;
  for (int a = 0; a < g.order(); ++a) {
    VertexMask higher = g.neighbors(a) & ~low_mask(a + 1);
    for_each_vertex(higher, [&](int b) {
      VertexMask common = higher & g.neighbors(b) & ~low_mask(b + 1);
      for_each_vertex(common, [&](int c) { out.push_back({a, b, c}); });
    });
  }
  return out;
}

// Shortest cycle length; nullopt for forests.
inline std::optional<int> girth(const Graph& g) {
  int best = kMaxOrder + 1;
  std::array<int, kMaxOrder> dist{};
  std::array<int, kMaxOrder> parent{};
  std::array<int, kMaxOrder> queue{};
  for (int s = 0; s < g.order(); ++s) {
    dist.fill(-1);
    dist[s] = 0;
    parent[s] = -1;
    int head = 0;
    int tail = 0;
    queue[tail++] = s;
    while (head < tail) {
      const int u = queue[head++];
      if (2 * dist[u] + 1 >= best) break;
      for_each_vertex(g.neighbors(u), [&](int w) {
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue[tail++] = w;
        } else if (w != parent[u]) {
          best = std::min(best, dist[u] + dist[w] + 1);
        }
      });
    }
  }
  if (best > kMaxOrder) return std::nullopt;
  return best;
}

inline bool girth_at_least(const Graph& g, int bound) {
  const auto gi = girth(g);
  return !gi.has_value() || *gi >= bound;
}

inline int min_degree(const Graph& g) {
  int best = g.order() == 0 ? 0 : kMaxOrder;
  for (int v = 0; v < g.order(); ++v) best = std::min(best, g.degree(v));
  return best;
}

// Basic families. Cycle vertices run 0..k-1 in cyclic order; path vertices
// 0..m-1 in path order.
inline Graph make_cycle(int k) {
  if (k < 3) throw GraphError("cycle needs at least 3 vertices");
  Graph g(k);
  for (int i = 0; i < k; ++i) g.add_edge_unchecked(i, (i + 1) % k);
  return g;
}

inline Graph make_path(int m) {
  if (m < 1) throw GraphError("path needs at least 1 vertex");
  Graph g(m);
  for (int i = 0; i + 1 < m; ++i) g.add_edge_unchecked(i, i + 1);
  return g;
}

inline Graph make_complete(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) g.add_edge_unchecked(u, v);
  }
  return g;
}

// K_{1,leaves} with centre 0.
inline Graph make_star(int leaves) {
  Graph g(leaves + 1);
  for (int v = 1; v <= leaves; ++v) g.add_edge_unchecked(0, v);
  return g;
}

inline Graph repeat_union(const Graph& part, int copies) {
  Graph out;
  for (int i = 0; i < copies; ++i) out = disjoint_union(out, part);
  return out;
}

}  // namespace arrowkit

#endif  // ARROWKIT_GRAPH_HPP_
