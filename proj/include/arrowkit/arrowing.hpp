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

// Deciding F -> (tK2, H): every red/blue colouring of E(F) has a red tK2 or
// a blue H. A (tK2, H)-colouring (no red tK2, no blue H) certifies the
// negation and can be re-checked with verify_coloring.

#ifndef ARROWKIT_ARROWING_HPP_
#define ARROWKIT_ARROWING_HPP_

#include <algorithm>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "arrowkit/containment.hpp"
#include "arrowkit/graph.hpp"
#include "arrowkit/pattern.hpp"

namespace arrowkit {

class ArrowingError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A decider's stated hypothesis does not hold for the input.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Search refused because the input exceeds the configured size limit.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Red edge subset of a host graph; the blue edges are the rest.
struct Coloring {
  Graph host;
  std::vector<Edge> red;  // normalized, ascending

  Graph red_graph() const {
    Graph g(host.order());
    for (const auto& [u, v] : red) g.add_edge_unchecked(u, v);
    return g;
  }

  Graph blue_graph() const {
    Graph g = host;
    for (const auto& [u, v] : red) g.remove_edge_unchecked(u, v);
    return g;
  }

  friend bool operator==(const Coloring&, const Coloring&) = default;
};

inline Coloring make_coloring(const Graph& host, std::vector<Edge> red) {
  for (auto& e : red) e = make_edge(e.first, e.second);
  std::sort(red.begin(), red.end());
  red.erase(std::unique(red.begin(), red.end()), red.end());
  return Coloring{host, std::move(red)};
}

// Red = every edge with an endpoint in `s`.
inline Coloring color_edges_meeting(const Graph& host, VertexMask s) {
  std::vector<Edge> red;
  for (const auto& e : host.edges()) {
    if (((s >> e.first) & 1U) || ((s >> e.second) & 1U)) red.push_back(e);
  }
  return Coloring{host, std::move(red)};
}

enum class ColoringStatus { kValid, kRedViolation, kBlueViolation };

inline const char* to_string(ColoringStatus s) {
  switch (s) {
    case ColoringStatus::kValid: return "valid";
    case ColoringStatus::kRedViolation: return "red_violation";
    case ColoringStatus::kBlueViolation: return "blue_violation";
  }
  return "?";
}

inline ColoringStatus verify_coloring(const Graph& f, int t, const Pattern& h,
                                      const Coloring& c) {
  if (!(c.host == f)) throw ArrowingError("colouring belongs to another host");
  for (const auto& [u, v] : c.red) {
    if (u < 0 || v < 0 || u >= f.order() || v >= f.order() || !f.has_edge(u, v)) {
      throw ArrowingError("red edge (" + std::to_string(u) + "," +
                          std::to_string(v) + ") is not an edge of the host");
    }
  }
  if (max_matching_size(c.red_graph()) >= t) return ColoringStatus::kRedViolation;
  if (contains(c.blue_graph(), h)) return ColoringStatus::kBlueViolation;
  return ColoringStatus::kValid;
}

enum class ArrowMethod { kGeneric, kLemma2K2, kLemma3K2, kComposed };

inline const char* to_string(ArrowMethod m) {
  switch (m) {
    case ArrowMethod::kGeneric: return "generic";
    case ArrowMethod::kLemma2K2: return "lemma2K2";
    case ArrowMethod::kLemma3K2: return "lemma3K2";
    case ArrowMethod::kComposed: return "composed";
  }
  return "?";
}

// The deletion whose remainder lacks H when a characterization fails.
struct DeletionTrace {
  enum class Kind { kVertex, kPair, kTriangle };
  Kind kind = Kind::kVertex;
  std::vector<int> vertices;

  friend bool operator==(const DeletionTrace&, const DeletionTrace&) = default;
};

inline const char* to_string(DeletionTrace::Kind k) {
  switch (k) {
    case DeletionTrace::Kind::kVertex: return "vertex";
    case DeletionTrace::Kind::kPair: return "pair";
    case DeletionTrace::Kind::kTriangle: return "triangle";
  }
  return "?";
}

struct ArrowVerdict {
  bool arrows = false;
  ArrowMethod method = ArrowMethod::kGeneric;
  Graph host;
  int t = 0;
  Pattern h;
  std::optional<Coloring> certificate;
  std::optional<DeletionTrace> trace;

  friend bool operator==(const ArrowVerdict&, const ArrowVerdict&) = default;
};

struct GenericOptions {
  int max_edges = 28;
};

namespace internal {

class ColoringSearch {
 public:
  ColoringSearch(const Graph& f, int t, const Pattern& h)
      : f_(f), t_(t), h_(h), red_(f.order()), blue_(f.order()) {
    order_ = f.edges();
    std::stable_sort(order_.begin(), order_.end(), [&](const Edge& a, const Edge& b) {
      return f.degree(a.first) + f.degree(a.second) >
             f.degree(b.first) + f.degree(b.second);
    });
  }

  std::optional<Coloring> run() {
    if (contains(blue_, h_)) return std::nullopt;
    if (!descend(0)) return std::nullopt;
    return make_coloring(f_, red_.edges());
  }

 private:
  // Only inclusion-maximal red sets are explored: a blue edge that could
  // still have joined the red side must end up blocked by later red edges.
  bool blockable(std::size_t next) const {
    if (pending_.empty()) return true;
    Graph reachable = red_;
    for (std::size_t i = next; i < order_.size(); ++i) {
      reachable.add_edge_unchecked(order_[i].first, order_[i].second);
    }
    if (max_matching_size(reachable) >= t_) return true;
    for (const auto& [u, v] : pending_) {
      if (max_matching_size(reachable.with_edge(u, v)) < t_) return false;
    }
    return true;
  }

  bool descend(std::size_t i) {
    if (!blockable(i)) return false;
    if (i == order_.size()) return true;
    const auto [u, v] = order_[i];

    red_.add_edge_unchecked(u, v);
    const bool red_ok = max_matching_size(red_) < t_;
    if (red_ok && descend(i + 1)) return true;
    red_.remove_edge_unchecked(u, v);

    blue_.add_edge_unchecked(u, v);
    if (!contains(blue_, h_)) {
      if (red_ok) pending_.push_back({u, v});
      if (descend(i + 1)) return true;
      if (red_ok) pending_.pop_back();
    }
    blue_.remove_edge_unchecked(u, v);
    return false;
  }

  const Graph& f_;
  int t_;
  Pattern h_;
  Graph red_;
  Graph blue_;
  std::vector<Edge> order_;
  std::vector<Edge> pending_;
};

inline void require_no_isolated_in_pattern(const Pattern& h) {
  if (h.is_path_like() && h.length() < 2) {
    throw PreconditionError(
        "deletion characterizations need a pattern without isolated vertices");
  }
}

inline ArrowVerdict edgeless_verdict(const Graph& f, int t, const Pattern& h,
                                     ArrowMethod method) {
  ArrowVerdict out{contains(f, h), method, f, t, h, std::nullopt, std::nullopt};
  if (!out.arrows) out.certificate = Coloring{f, {}};
  return out;
}

}  // namespace internal

// Complete search for a (tK2, H)-colouring. Branches on edges in descending
// order of endpoint degree sum, red before blue; prunes on a red tK2, a blue
// H, and red sets that can no longer become inclusion-maximal.
inline ArrowVerdict arrows_generic(const Graph& f, int t, const Pattern& h,
                                   const GenericOptions& options = {}) {
  if (t < 1) throw ArrowingError("matching size t must be >= 1");
  if (f.edge_count() > options.max_edges) {
    throw BudgetExceeded("generic arrowing search limited to " +
                         std::to_string(options.max_edges) + " edges, host has " +
                         std::to_string(f.edge_count()));
  }
  ArrowVerdict out{true, ArrowMethod::kGeneric, f, t, h, std::nullopt, std::nullopt};
  if (auto c = internal::ColoringSearch(f, t, h).run()) {
    out.arrows = false;
    out.certificate = std::move(c);
  }
  return out;
}

// F -> (2K2, H) iff H survives deleting any one vertex and deleting the
// edges of any one triangle. A red graph without 2K2 is a star or a
// triangle, which is what the two conditions range over.
inline ArrowVerdict arrows_2k2_lemma(const Graph& f, const Pattern& h) {
  internal::require_no_isolated_in_pattern(h);
  if (f.order() == 0) {
    return internal::edgeless_verdict(f, 2, h, ArrowMethod::kLemma2K2);
  }
  ArrowVerdict out{true, ArrowMethod::kLemma2K2, f, 2, h, std::nullopt, std::nullopt};
  for (const auto& tri : triangles(f)) {
    const std::vector<Edge> sides{{tri[0], tri[1]}, {tri[0], tri[2]}, {tri[1], tri[2]}};
    if (!contains(delete_edges(f, sides), h)) {
      out.arrows = false;
      out.trace = DeletionTrace{DeletionTrace::Kind::kTriangle, {tri[0], tri[1], tri[2]}};
      out.certificate = make_coloring(f, sides);
      return out;
    }
  }
  for (int v = 0; v < f.order(); ++v) {
    if (!contains(delete_vertices(f, bit(v)), h)) {
      out.arrows = false;
      out.trace = DeletionTrace{DeletionTrace::Kind::kVertex, {v}};
      out.certificate = color_edges_meeting(f, bit(v));
      return out;
    }
  }
  return out;
}

// The 2K2 characterization for a host given by its components, so unions
// beyond the vertex cap can still be decided. Path and path-union targets
// only: disjoint P_m copies in a union add up over components.
struct PartsVerdict {
  bool arrows = true;
  std::optional<int> part;  // index of the part holding the failing deletion
  std::optional<DeletionTrace> trace;
};

inline PartsVerdict arrows_2k2_lemma_parts(std::span<const Graph> parts, const Pattern& h) {
  if (!h.is_path_like() || h.length() < 2) {
    throw PreconditionError("component-wise decision needs a path or path union");
  }
  const int n = h.copies();
  const int m = h.length();
  auto capacity = [&](const Graph& g) {
    return internal::max_disjoint_paths(g, g.vertices(), m, n);
  };
  std::vector<int> caps;
  int total = 0;
  for (const Graph& g : parts) {
    caps.push_back(capacity(g));
    total += caps.back();
  }
  PartsVerdict out;
  if (total < n) {
    out.arrows = false;  // already fails with nothing deleted
    return out;
  }
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const Graph& g = parts[i];
    const int rest = total - caps[i];
    for (const auto& tri : triangles(g)) {
      const std::vector<Edge> sides{{tri[0], tri[1]}, {tri[0], tri[2]}, {tri[1], tri[2]}};
      if (rest + capacity(delete_edges(g, sides)) < n) {
        return {false, static_cast<int>(i),
                DeletionTrace{DeletionTrace::Kind::kTriangle, {tri[0], tri[1], tri[2]}}};
      }
    }
    for (int v = 0; v < g.order(); ++v) {
      if (rest + capacity(delete_vertices(g, bit(v))) < n) {
        return {false, static_cast<int>(i), DeletionTrace{DeletionTrace::Kind::kVertex, {v}}};
      }
    }
  }
  return out;
}

// For hosts without cycles of length <= 5: F -> (3K2, H) iff H survives
// deleting any two distinct vertices.
inline ArrowVerdict arrows_3k2_lemma(const Graph& f, const Pattern& h) {
  internal::require_no_isolated_in_pattern(h);
  if (!girth_at_least(f, 6)) {
    throw PreconditionError(
        "3K2 deletion characterization needs girth >= 6; use the generic search");
  }
  if (f.order() < 2) {
    return internal::edgeless_verdict(f, 3, h, ArrowMethod::kLemma3K2);
  }
  ArrowVerdict out{true, ArrowMethod::kLemma3K2, f, 3, h, std::nullopt, std::nullopt};
  for (int u = 0; u < f.order(); ++u) {
    for (int v = u + 1; v < f.order(); ++v) {
      const VertexMask pair = bit(u) | bit(v);
      if (!contains(delete_vertices(f, pair), h)) {
        out.arrows = false;
        out.trace = DeletionTrace{DeletionTrace::Kind::kPair, {u, v}};
        out.certificate = color_edges_meeting(f, pair);
        return out;
      }
    }
  }
  return out;
}

enum class MethodChoice { kAuto, kGeneric, kLemma };

inline bool lemma_applicable(const Pattern& h) {
  return !(h.is_path_like() && h.length() < 2);
}

// Auto: t = 2 uses the 2K2 characterization, t = 3 on girth >= 6 hosts the
// 3K2 one, everything else the generic search.
inline ArrowVerdict arrows(const Graph& f, int t, const Pattern& h,
                           MethodChoice method = MethodChoice::kAuto,
                           const GenericOptions& options = {}) {
  switch (method) {
    case MethodChoice::kGeneric: return arrows_generic(f, t, h, options);
    case MethodChoice::kLemma:
      if (t == 2) return arrows_2k2_lemma(f, h);
      if (t == 3) return arrows_3k2_lemma(f, h);
      throw PreconditionError("no deletion characterization for t = " +
                              std::to_string(t));
    case MethodChoice::kAuto:
      if (lemma_applicable(h)) {
        if (t == 2) return arrows_2k2_lemma(f, h);
        if (t == 3 && girth_at_least(f, 6)) return arrows_3k2_lemma(f, h);
      }
      return arrows_generic(f, t, h, options);
  }
  return arrows_generic(f, t, h, options);
}

struct AdversaryColoring {
  Coloring coloring;
  int pivot = -1;   // the vertex u whose edges are red
  int degree = 0;   // its degree d
};

// Colouring of a connected host with at most n*m edges that has no red 2K2
// and no blue nP_m: red = all edges at u, where u is adjacent to a leaf (tree)
// or lies on a cycle. F - u then has fewer than nm vertices outside the
// isolated ones.
inline AdversaryColoring adversarial_coloring_connected(const Graph& f, int n,
                                                        int m) {
  if (n < 1 || m < 2) throw PreconditionError("adversary colouring needs n >= 1, m >= 2");
  if (f.edge_count() == 0) throw PreconditionError("adversary colouring needs an edge");
  if (!is_connected(f)) throw PreconditionError("host must be connected");
  if (f.edge_count() > n * m) {
    throw PreconditionError("host has more than n*m edges");
  }
  int pivot = -1;
  if (f.edge_count() == f.order() - 1) {
    for (int v = 0; v < f.order() && pivot < 0; ++v) {
      const VertexMask nb = f.neighbors(v);
      for_each_vertex(nb, [&](int w) {
        if (f.degree(w) == 1) pivot = v;
      });
    }
  } else {
    for (int v = 0; v < f.order() && pivot < 0; ++v) {
      for_each_vertex(f.neighbors(v), [&](int w) {
        if (pivot >= 0) return;
        // Edge vw lies on a cycle iff w is still reachable without it.
        const Graph cut = f.without_edge(v, w);
        if ((reach(cut, v, cut.vertices()) >> w) & 1U) pivot = v;
      });
    }
  }
  return AdversaryColoring{color_edges_meeting(f, bit(pivot)), pivot, f.degree(pivot)};
}

struct ComposedArrowing {
  Graph host;
  ArrowVerdict verdict;
};

// F_i -> (t_i K2, H) for every part gives (F_1 + ... + F_k) -> (sum t_i K2, H).
inline ComposedArrowing compose_union_arrowing(std::span<const ArrowVerdict> parts) {
  if (parts.empty()) throw ArrowingError("nothing to compose");
  Graph host;
  int t = 0;
  for (const auto& part : parts) {
    if (!part.arrows) throw ArrowingError("cannot compose a non-arrowing part");
    if (!(part.h == parts.front().h)) {
      throw ArrowingError("parts disagree on the blue pattern");
    }
    host = disjoint_union(host, part.host);
    t += part.t;
  }
  if (parts.size() == 1) return ComposedArrowing{parts.front().host, parts.front()};
  ArrowVerdict v{true, ArrowMethod::kComposed, host, t, parts.front().h,
                 std::nullopt, std::nullopt};
  return ComposedArrowing{host, std::move(v)};
}

}  // namespace arrowkit

#endif  // ARROWKIT_ARROWING_HPP_
