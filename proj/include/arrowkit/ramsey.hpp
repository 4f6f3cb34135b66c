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

// Size Ramsey numbers r(tK2, H) and their connected variant rc(tK2, H):
// closed-form bounds as data, and exact values by exhaustive search.

#ifndef ARROWKIT_RAMSEY_HPP_
#define ARROWKIT_RAMSEY_HPP_

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "arrowkit/arrowing.hpp"
#include "arrowkit/constructions.hpp"
#include "arrowkit/enumeration.hpp"
#include "arrowkit/graph.hpp"
#include "arrowkit/parallel.hpp"
#include "arrowkit/pattern.hpp"
#include "arrowkit/version.hpp"

namespace arrowkit {

// ---------------------------------------------------------------------------
// Bounds table

enum class BoundKind { kUpper, kLower, kExact };

inline const char* to_string(BoundKind k) {
  switch (k) {
    case BoundKind::kUpper: return "upper";
    case BoundKind::kLower: return "lower";
    case BoundKind::kExact: return "exact";
  }
  return "?";
}

struct BoundEntry {
  int value = 0;
  BoundKind kind = BoundKind::kUpper;
  std::string source;
  std::string conditions;
  bool best = false;

  friend bool operator==(const BoundEntry&, const BoundEntry&) = default;
};

struct OmittedBound {
  std::string source;
  std::string reason;

  friend bool operator==(const OmittedBound&, const OmittedBound&) = default;
};

struct BoundsRecord {
  int t = 0;
  Pattern h;
  bool connected = false;
  std::vector<BoundEntry> bounds;
  std::vector<OmittedBound> omitted;

  std::optional<int> best_upper() const {
    std::optional<int> out;
    for (const auto& b : bounds) {
      if (b.kind != BoundKind::kLower && (!out || b.value < *out)) out = b.value;
    }
    return out;
  }

  std::optional<int> best_lower() const {
    std::optional<int> out;
    for (const auto& b : bounds) {
      if (b.kind != BoundKind::kUpper && (!out || b.value > *out)) out = b.value;
    }
    return out;
  }

  // True iff `value` respects every entry.
  bool admits(int value) const {
    for (const auto& b : bounds) {
      if (b.kind != BoundKind::kLower && value > b.value) return false;
      if (b.kind != BoundKind::kUpper && value < b.value) return false;
    }
    return true;
  }
};

namespace internal {

enum class Scope { kPlain, kConnected };

// One closed-form statement. `rejects` returns the reason the formula does
// not apply, or nullopt when it does.
struct BoundFormula {
  std::string source;
  BoundKind kind;
  Scope scope;
  std::string conditions;
  std::function<std::optional<std::string>(int t, const Pattern& h)> rejects;
  std::function<int(int t, const Pattern& h)> value;
};

inline int ceil_half(int x) { return (x + 1) / 2; }

inline std::optional<std::string> need_path(const Pattern& h, int min_m) {
  if (h.kind() != PatternKind::kPath) return "pattern is not a single path";
  if (h.length() < min_m) return "needs m >= " + std::to_string(min_m);
  return std::nullopt;
}

inline std::optional<std::string> need_path_like(const Pattern& h, int min_m) {
  if (!h.is_path_like()) return "pattern is not a path or path union";
  if (h.length() < min_m) return "needs m >= " + std::to_string(min_m);
  return std::nullopt;
}

inline int small_union_value(int, const Pattern& h) {
  const int n = h.copies();
  const int m = h.length();
  return std::min(n * m + 1, (n + 1) * (m - 1));
}

inline const std::vector<BoundFormula>& bound_formulas() {
  static const std::vector<BoundFormula> table = [] {
    std::vector<BoundFormula> f;
    f.push_back({"tk2-path-upper", BoundKind::kUpper, Scope::kPlain,
                 "t >= 1, m >= 3; t(m+1)/2 (t even), (t+1)(m+1)/2 - 2 (t odd)",
                 [](int t, const Pattern& h) {
                   if (t < 1) return std::optional<std::string>("needs t >= 1");
                   return need_path(h, 3);
                 },
                 [](int t, const Pattern& h) {
                   const int m = h.length();
                   return t % 2 == 0 ? t * (m + 1) / 2 : (t + 1) * (m + 1) / 2 - 2;
                 }});
    f.push_back({"tk2-path-connected-upper", BoundKind::kUpper, Scope::kConnected,
                 "t >= 1, m >= 3; t(m+2)/2 - 1 (t even), (t+1)(m+2)/2 - 3 (t odd)",
                 [](int t, const Pattern& h) {
                   if (t < 1) return std::optional<std::string>("needs t >= 1");
                   return need_path(h, 3);
                 },
                 [](int t, const Pattern& h) {
                   const int m = h.length();
                   return t % 2 == 0 ? t * (m + 2) / 2 - 1 : (t + 1) * (m + 2) / 2 - 3;
                 }});
    for (const Scope scope : {Scope::kPlain, Scope::kConnected}) {
      f.push_back({scope == Scope::kPlain ? "2k2-path-exact" : "2k2-path-connected-exact",
                   BoundKind::kExact, scope, "t = 2, m >= 3; m + 1",
                   [](int t, const Pattern& h) {
                     if (t != 2) return std::optional<std::string>("needs t = 2");
                     return need_path(h, 3);
                   },
                   [](int, const Pattern& h) { return h.length() + 1; }});
    }
    f.push_back({"tk2-p4-exact", BoundKind::kExact, Scope::kPlain,
                 "t >= 1, H = P4; ceil(5t/2)",
                 [](int t, const Pattern& h) -> std::optional<std::string> {
                   if (t < 1) return "needs t >= 1";
                   if (!(h == Pattern::path(4))) return "pattern is not P4";
                   return std::nullopt;
                 },
                 [](int t, const Pattern&) { return ceil_half(5 * t); }});
    f.push_back({"tk2-p5-exact", BoundKind::kExact, Scope::kPlain,
                 "t >= 1, H = P5; 3t (t even), 3t + 1 (t odd)",
                 [](int t, const Pattern& h) -> std::optional<std::string> {
                   if (t < 1) return "needs t >= 1";
                   if (!(h == Pattern::path(5))) return "pattern is not P5";
                   return std::nullopt;
                 },
                 [](int t, const Pattern&) { return t % 2 == 0 ? 3 * t : 3 * t + 1; }});
    f.push_back({"2k2-path-union-upper", BoundKind::kUpper, Scope::kPlain,
                 "t = 2, n >= 1, m >= 3; min{nm+1, (n+1)(m-1)}",
                 [](int t, const Pattern& h) {
                   if (t != 2) return std::optional<std::string>("needs t = 2");
                   return need_path_like(h, 3);
                 },
                 small_union_value});
    f.push_back({"2k2-path-union-connected-exact", BoundKind::kExact, Scope::kConnected,
                 "t = 2, n >= 1, m >= 3; nm + 1",
                 [](int t, const Pattern& h) {
                   if (t != 2) return std::optional<std::string>("needs t = 2");
                   return need_path_like(h, 3);
                 },
                 [](int, const Pattern& h) { return h.copies() * h.length() + 1; }});
    f.push_back({"2k2-path-union-small-n-exact", BoundKind::kExact, Scope::kPlain,
                 "t = 2, n in {2, 3, 4}, m >= 3; min{nm+1, (n+1)(m-1)}",
                 [](int t, const Pattern& h) -> std::optional<std::string> {
                   if (t != 2) return "needs t = 2";
                   if (h.kind() != PatternKind::kPathUnion) return "pattern is not a path union";
                   if (h.copies() > 4) return "needs n <= 4";
                   if (h.length() < 3) return "needs m >= 3";
                   return std::nullopt;
                 },
                 small_union_value});
    f.push_back({"odd-t-path-upper", BoundKind::kUpper, Scope::kPlain,
                 "odd t >= 3, m >= 9; ceil((3m+7)/2) + (t-3)(m+1)/2",
                 [](int t, const Pattern& h) -> std::optional<std::string> {
                   if (t < 3 || t % 2 == 0) return "needs odd t >= 3";
                   return need_path(h, 9);
                 },
                 [](int t, const Pattern& h) {
                   const int m = h.length();
                   return ceil_half(3 * m + 7) + (t - 3) * (m + 1) / 2;
                 }});
    f.push_back({"odd-t-path-connected-upper", BoundKind::kUpper, Scope::kConnected,
                 "odd t >= 3, m >= 9; ceil((3m+7)/2) + (t-3)(m+2)/2",
                 [](int t, const Pattern& h) -> std::optional<std::string> {
                   if (t < 3 || t % 2 == 0) return "needs odd t >= 3";
                   return need_path(h, 9);
                 },
                 [](int t, const Pattern& h) {
                   const int m = h.length();
                   return ceil_half(3 * m + 7) + (t - 3) * (m + 2) / 2;
                 }});
    f.push_back({"2k2-cycle-connected-upper", BoundKind::kUpper, Scope::kConnected,
                 "t = 2, n >= 6; (3n+4)/2 (n even), (3n+7)/2 (n odd)",
                 [](int t, const Pattern& h) -> std::optional<std::string> {
                   if (t != 2) return "needs t = 2";
                   if (h.kind() != PatternKind::kCycle) return "pattern is not a cycle";
                   if (h.length() < 6) return "needs n >= 6";
                   return std::nullopt;
                 },
                 [](int, const Pattern& h) {
                   const int n = h.length();
                   return n % 2 == 0 ? (3 * n + 4) / 2 : (3 * n + 7) / 2;
                 }});
    return f;
  }();
  return table;
}

}  // namespace internal

// Every applicable closed-form bound for r(tK2, h) (or rc when connected).
// Connected upper bounds also bound r from above and plain lower bounds
// also bound rc from below, since r <= rc; such transfers are tagged.
inline BoundsRecord closed_form_bounds(int t, const Pattern& h, bool connected) {
  using internal::Scope;
  BoundsRecord rec{t, h, connected, {}, {}};
  const Scope want = connected ? Scope::kConnected : Scope::kPlain;
  for (const auto& f : internal::bound_formulas()) {
    if (const auto why = f.rejects(t, h)) {
      rec.omitted.push_back({f.source, *why});
      continue;
    }
    const int value = f.value(t, h);
    if (f.scope == want) {
      if (f.kind == BoundKind::kExact) {
        rec.bounds.push_back({value, BoundKind::kExact, f.source, f.conditions});
        rec.bounds.push_back({value, BoundKind::kUpper, f.source, f.conditions});
        rec.bounds.push_back({value, BoundKind::kLower, f.source, f.conditions});
      } else {
        rec.bounds.push_back({value, f.kind, f.source, f.conditions});
      }
      continue;
    }
    const std::string via = f.conditions + "; via r <= rc";
    if (connected && f.kind != BoundKind::kUpper) {
      rec.bounds.push_back({value, BoundKind::kLower, f.source, via});
    } else if (!connected && f.kind != BoundKind::kLower) {
      rec.bounds.push_back({value, BoundKind::kUpper, f.source, via});
    } else {
      rec.omitted.push_back({f.source, connected ? "plain upper bound does not bound rc"
                                                 : "connected lower bound does not bound r"});
    }
  }
  if (const auto best = rec.best_upper()) {
    for (auto& b : rec.bounds) {
      if (b.kind != BoundKind::kLower && b.value == *best) {
        b.best = true;
        break;
      }
    }
  }
  return rec;
}

// ---------------------------------------------------------------------------
// Exhaustive search

struct SearchQuery {
  int t = 2;
  Pattern h;
  bool connected = false;

  friend bool operator==(const SearchQuery&, const SearchQuery&) = default;
};

struct CertificateRecord {
  Coloring coloring;
  std::string strategy;  // adversary | lemma2K2 | lemma3K2 | generic
  std::optional<int> pivot;
  std::optional<int> pivot_degree;

  friend bool operator==(const CertificateRecord&, const CertificateRecord&) = default;
};

struct SizeRecord {
  int edges = 0;
  std::int64_t scanned = 0;
  bool all_admit_coloring = true;
  std::vector<CertificateRecord> certificates;

  friend bool operator==(const SizeRecord&, const SizeRecord&) = default;
};

struct WitnessRecord {
  Graph graph;
  ArrowVerdict verdict;
  std::string source;

  friend bool operator==(const WitnessRecord&, const WitnessRecord&) = default;
};

enum class ConclusionKind { kExact, kInterval, kBudgetExhausted };

inline const char* to_string(ConclusionKind k) {
  switch (k) {
    case ConclusionKind::kExact: return "exact";
    case ConclusionKind::kInterval: return "interval";
    case ConclusionKind::kBudgetExhausted: return "budget-exhausted";
  }
  return "?";
}

struct Conclusion {
  ConclusionKind kind = ConclusionKind::kBudgetExhausted;
  int lower = 0;               // every smaller size is refuted
  std::optional<int> upper;    // size of the verified witness

  friend bool operator==(const Conclusion&, const Conclusion&) = default;
};

struct SearchReport {
  SearchQuery query;
  int budget = 0;
  std::vector<SizeRecord> per_size;
  std::optional<WitnessRecord> witness;
  Conclusion conclusion;
  std::vector<std::string> reductions;
  std::int64_t wall_time_ms = 0;

  std::optional<int> exact() const {
    if (conclusion.kind != ConclusionKind::kExact) return std::nullopt;
    return conclusion.lower;
  }

  friend bool operator==(const SearchReport&, const SearchReport&) = default;
};

struct SearchOptions {
  GenericOptions generic;
};

// Explicit constructions tried as upper witnesses before enumeration
// reaches their size, tagged with their family spec.
inline std::vector<std::pair<std::string, Graph>> construction_candidates(
    const SearchQuery& q) {
  std::vector<std::pair<std::string, Graph>> out;
  if (q.t == 2 && q.h.is_path_like() && q.h.length() >= 2) {
    const int n = q.h.copies();
    const int m = q.h.length();
    const auto s = std::to_string(n) + "," + std::to_string(m);
    if (n * m + 1 <= kMaxOrder) out.push_back({"fig1a:" + s, build_family(LongCycleFamily{n, m})});
    if (!q.connected && (n + 1) * m <= kMaxOrder && n > 1) {
      out.push_back({"fig1b:" + s, build_family(SpareCopyFamily{n, m})});
    }
  }
  return out;
}

namespace internal {

struct Certification {
  std::optional<CertificateRecord> certificate;
  std::optional<ArrowVerdict> arrowing;
};

// Cheapest first: the connected-host adversary colouring, then the
// deletion characterizations, then the generic search.
inline Certification certify(const Graph& g, const SearchQuery& q,
                             const SearchOptions& options) {
  const Pattern& h = q.h;
  if (q.t >= 2 && h.is_path_like() && h.length() >= 2 && g.edge_count() >= 1 &&
      g.edge_count() <= h.copies() * h.length() && is_connected(g)) {
    AdversaryColoring a = adversarial_coloring_connected(g, h.copies(), h.length());
    if (verify_coloring(g, q.t, h, a.coloring) == ColoringStatus::kValid) {
      return {CertificateRecord{std::move(a.coloring), "adversary", a.pivot, a.degree},
              std::nullopt};
    }
  }
  ArrowVerdict v = arrows(g, q.t, h, MethodChoice::kAuto, options.generic);
  if (v.arrows) return {std::nullopt, std::move(v)};
  if (!v.certificate ||
      verify_coloring(g, q.t, h, *v.certificate) != ColoringStatus::kValid) {
    throw ArrowingError("decider returned an unverifiable certificate");
  }
  return {CertificateRecord{std::move(*v.certificate), to_string(v.method),
                            std::nullopt, std::nullopt},
          std::nullopt};
}

inline const char* kComponentReduction =
    "components without P_m may be coloured entirely blue, so only hosts whose "
    "every component contains P_m are enumerated; a host with such a component "
    "is refuted by the certificate of the smaller host without it";

}  // namespace internal

// Smallest e(F) with F -> (tK2, h) (F connected if requested). Sizes
// 0..budget are enumerated exhaustively and each host gets a verified
// colouring certificate; the witness is the first arrowing host found, or an
// explicit construction verified by the deciders.
inline SearchReport size_ramsey_exact(int t, const Pattern& h, bool connected,
                                      int budget, const SearchOptions& options = {}) {
  const auto started = std::chrono::steady_clock::now();
  if (t < 1) throw ArrowingError("matching size t must be >= 1");
  if (budget < 0) throw EnumerationError("budget must be >= 0");
  if (budget > kMaxEnumBudget) {
    throw BudgetExceeded("search budget is capped at " + std::to_string(kMaxEnumBudget) +
                         " edges");
  }
  SearchReport report;
  report.query = SearchQuery{t, h, connected};
  report.budget = budget;

  std::optional<WitnessRecord> constructed;
  for (auto& [name, g] : construction_candidates(report.query)) {
    if (constructed && constructed->graph.edge_count() <= g.edge_count()) continue;
    ArrowVerdict v = arrows(g, t, h, MethodChoice::kAuto, options.generic);
    if (v.arrows) constructed = WitnessRecord{g, std::move(v), "construction:" + name};
  }

  EnumConstraints base;
  base.connected = connected;
  if (!connected && h.is_path_like()) {
    base.component_contains = Pattern::path(h.length());
    report.reductions.push_back(internal::kComponentReduction);
  }

  int limit = budget;
  if (constructed) limit = std::min(limit, constructed->graph.edge_count() - 1);
  EnumerationTree tree;
  int lower = 0;
  std::optional<WitnessRecord> found;
  for (int s = 0; s <= limit; ++s) {
    EnumConstraints c = base;
    c.edges = s;
    const std::vector<Graph> hosts = select_level(tree, c);
    std::vector<internal::Certification> results(hosts.size());
    parallel_for(hosts.size(), [&](std::size_t i) {
      results[i] = internal::certify(hosts[i], report.query, options);
    });
    SizeRecord rec;
    rec.edges = s;
    rec.scanned = static_cast<std::int64_t>(hosts.size());
    for (std::size_t i = 0; i < hosts.size(); ++i) {
      if (results[i].arrowing) {
        rec.all_admit_coloring = false;
        if (!found) found = WitnessRecord{hosts[i], *results[i].arrowing, "enumeration"};
      } else {
        rec.certificates.push_back(std::move(*results[i].certificate));
      }
    }
    report.per_size.push_back(std::move(rec));
    if (found) break;
    lower = s + 1;
  }

  report.witness = found ? found : constructed;
  report.conclusion.lower = lower;
  if (report.witness) {
    const int w = report.witness->graph.edge_count();
    report.conclusion.upper = w;
    report.conclusion.kind = w == lower ? ConclusionKind::kExact : ConclusionKind::kInterval;
  } else {
    report.conclusion.kind = ConclusionKind::kBudgetExhausted;
  }
  report.wall_time_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - started)
                            .count();
  return report;
}

// Bracket r(2K2, nP_m) for n >= 5 within the budget. The upper end comes
// from verified constructions; nothing beyond the verified interval is
// asserted.
inline SearchReport conjecture_probe(int n, int m, int budget,
                                     const SearchOptions& options = {}) {
  if (n < 5) throw PreconditionError("probe is for n >= 5");
  if (m < 3) throw PreconditionError("probe needs m >= 3");
  return size_ramsey_exact(2, Pattern::path_union(n, m), false, budget, options);
}

}  // namespace arrowkit

#endif  // ARROWKIT_RAMSEY_HPP_
