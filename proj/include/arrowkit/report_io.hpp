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

// JSON serialization of certificates, verdicts and search reports, plus
// re-verification of everything a loaded report claims. Objects use
// nlohmann::json, whose std::map storage keeps keys sorted.

#ifndef ARROWKIT_REPORT_IO_HPP_
#define ARROWKIT_REPORT_IO_HPP_

#include <algorithm>
#include <fstream>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "arrowkit/arrowing.hpp"
#include "arrowkit/graph6.hpp"
#include "arrowkit/pattern.hpp"
#include "arrowkit/ramsey.hpp"
#include "arrowkit/version.hpp"

namespace arrowkit {

using Json = nlohmann::json;

class ReportError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace internal {

inline Json edge_list_json(const std::vector<Edge>& edges) {
  Json out = Json::array();
  for (const auto& [u, v] : edges) out.push_back({u, v});
  return out;
}

inline std::vector<Edge> edge_list_from(const Json& j) {
  std::vector<Edge> out;
  for (const auto& e : j) out.push_back({e.at(0).get<int>(), e.at(1).get<int>()});
  return out;
}

template <typename Enum, std::size_t N>
Enum enum_from(const std::string& text, const Enum (&all)[N]) {
  for (const Enum e : all) {
    if (text == to_string(e)) return e;
  }
  throw ReportError("unknown enum value '" + text + "'");
}

inline Json optional_int(const std::optional<int>& v) { return v ? Json(*v) : Json(); }

inline std::optional<int> int_from(const Json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<int>();
}

}  // namespace internal

// ---------------------------------------------------------------------------
// Certificates: {host, pattern, red, t}

inline Json certificate_to_json(const Coloring& c, int t, const Pattern& h) {
  return Json{{"host", encode_graph6(c.host)},
              {"t", t},
              {"pattern", h.to_string()},
              {"red", internal::edge_list_json(c.red)}};
}

struct LoadedCertificate {
  Coloring coloring;
  int t = 0;
  Pattern h;
};

inline LoadedCertificate certificate_from_json(const Json& j) {
  const Graph host = decode_graph6(j.at("host").get<std::string>());
  return {make_coloring(host, internal::edge_list_from(j.at("red"))), j.at("t").get<int>(),
          parse_pattern(j.at("pattern").get<std::string>())};
}

// ---------------------------------------------------------------------------
// Verdicts

inline Json verdict_to_json(const ArrowVerdict& v) {
  Json j{{"arrows", v.arrows},
         {"method", to_string(v.method)},
         {"host", encode_graph6(v.host)},
         {"t", v.t},
         {"pattern", v.h.to_string()}};
  j["red"] = v.certificate ? internal::edge_list_json(v.certificate->red) : Json();
  if (v.trace) {
    j["trace"] = Json{{"kind", to_string(v.trace->kind)}, {"vertices", v.trace->vertices}};
  } else {
    j["trace"] = Json();
  }
  return j;
}

inline ArrowVerdict verdict_from_json(const Json& j) {
  ArrowVerdict v;
  v.arrows = j.at("arrows").get<bool>();
  static constexpr ArrowMethod kMethods[] = {ArrowMethod::kGeneric, ArrowMethod::kLemma2K2,
                                             ArrowMethod::kLemma3K2, ArrowMethod::kComposed};
  v.method = internal::enum_from(j.at("method").get<std::string>(), kMethods);
  v.host = decode_graph6(j.at("host").get<std::string>());
  v.t = j.at("t").get<int>();
  v.h = parse_pattern(j.at("pattern").get<std::string>());
  if (!j.at("red").is_null()) {
    v.certificate = make_coloring(v.host, internal::edge_list_from(j.at("red")));
  }
  if (!j.at("trace").is_null()) {
    static constexpr DeletionTrace::Kind kKinds[] = {
        DeletionTrace::Kind::kVertex, DeletionTrace::Kind::kPair,
        DeletionTrace::Kind::kTriangle};
    const Json& tr = j.at("trace");
    v.trace = DeletionTrace{internal::enum_from(tr.at("kind").get<std::string>(), kKinds),
                            tr.at("vertices").get<std::vector<int>>()};
  }
  return v;
}

// ---------------------------------------------------------------------------
// Search reports

inline Json report_to_json(const SearchReport& r) {
  Json j;
  j["query"] = Json{{"left", "M" + std::to_string(r.query.t)},
                    {"t", r.query.t},
                    {"right", r.query.h.to_string()},
                    {"connected", r.query.connected}};
  j["budget"] = r.budget;
  Json sizes = Json::array();
  for (const auto& s : r.per_size) {
    Json certs = Json::array();
    for (const auto& c : s.certificates) {
      certs.push_back(Json{{"host", encode_graph6(c.coloring.host)},
                           {"red", internal::edge_list_json(c.coloring.red)},
                           {"strategy", c.strategy},
                           {"pivot", internal::optional_int(c.pivot)},
                           {"pivot_degree", internal::optional_int(c.pivot_degree)}});
    }
    sizes.push_back(Json{{"edges", s.edges},
                         {"scanned", s.scanned},
                         {"all_admit_coloring", s.all_admit_coloring},
                         {"certificates", std::move(certs)}});
  }
  j["per_size"] = std::move(sizes);
  if (r.witness) {
    j["witness"] = Json{{"graph6", encode_graph6(r.witness->graph)},
                        {"source", r.witness->source},
                        {"verdict", verdict_to_json(r.witness->verdict)}};
  } else {
    j["witness"] = Json();
  }
  j["conclusion"] = Json{{"kind", to_string(r.conclusion.kind)},
                         {"lower", r.conclusion.lower},
                         {"upper", internal::optional_int(r.conclusion.upper)}};
  j["reductions"] = r.reductions;
  j["tool_version"] = kToolVersion;
  j["wall_time_ms"] = r.wall_time_ms;
  return j;
}

inline SearchReport report_from_json(const Json& j) {
  SearchReport r;
  const Json& q = j.at("query");
  r.query = SearchQuery{q.at("t").get<int>(), parse_pattern(q.at("right").get<std::string>()),
                        q.at("connected").get<bool>()};
  r.budget = j.at("budget").get<int>();
  for (const Json& s : j.at("per_size")) {
    SizeRecord rec;
    rec.edges = s.at("edges").get<int>();
    rec.scanned = s.at("scanned").get<std::int64_t>();
    rec.all_admit_coloring = s.at("all_admit_coloring").get<bool>();
    for (const Json& c : s.at("certificates")) {
      const Graph host = decode_graph6(c.at("host").get<std::string>());
      rec.certificates.push_back(
          CertificateRecord{make_coloring(host, internal::edge_list_from(c.at("red"))),
                            c.at("strategy").get<std::string>(),
                            internal::int_from(c.at("pivot")),
                            internal::int_from(c.at("pivot_degree"))});
    }
    r.per_size.push_back(std::move(rec));
  }
  if (!j.at("witness").is_null()) {
    const Json& w = j.at("witness");
    r.witness = WitnessRecord{decode_graph6(w.at("graph6").get<std::string>()),
                              verdict_from_json(w.at("verdict")),
                              w.at("source").get<std::string>()};
  }
  const Json& c = j.at("conclusion");
  static constexpr ConclusionKind kKinds[] = {ConclusionKind::kExact, ConclusionKind::kInterval,
                                              ConclusionKind::kBudgetExhausted};
  r.conclusion = Conclusion{internal::enum_from(c.at("kind").get<std::string>(), kKinds),
                            c.at("lower").get<int>(), internal::int_from(c.at("upper"))};
  r.reductions = j.at("reductions").get<std::vector<std::string>>();
  r.wall_time_ms = j.at("wall_time_ms").get<std::int64_t>();
  return r;
}

// Every claim in `r` rechecked from scratch. Returns the problems found;
// empty means the report stands.
inline std::vector<std::string> reverify_report(const SearchReport& r,
                                                const GenericOptions& options = {}) {
  std::vector<std::string> problems;
  const int t = r.query.t;
  const Pattern& h = r.query.h;
  for (const auto& s : r.per_size) {
    for (const auto& c : s.certificates) {
      if (c.coloring.host.edge_count() != s.edges) {
        problems.push_back("certificate host size differs from its level " +
                           std::to_string(s.edges));
      }
      if (r.query.connected && !is_connected(c.coloring.host)) {
        problems.push_back("disconnected host in a connected search");
      }
      if (verify_coloring(c.coloring.host, t, h, c.coloring) != ColoringStatus::kValid) {
        problems.push_back("invalid certificate for " + encode_graph6(c.coloring.host));
      }
    }
    if (s.all_admit_coloring &&
        static_cast<std::int64_t>(s.certificates.size()) != s.scanned) {
      problems.push_back("size " + std::to_string(s.edges) +
                         " claims all hosts refuted but stores " +
                         std::to_string(s.certificates.size()) + " of " +
                         std::to_string(s.scanned) + " certificates");
    }
  }
  if (r.witness) {
    const ArrowVerdict& v = r.witness->verdict;
    if (!(v.host == r.witness->graph) || v.t != t || !(v.h == h) || !v.arrows) {
      problems.push_back("witness verdict does not match the query");
    } else if (v.method != ArrowMethod::kComposed) {
      const MethodChoice choice =
          v.method == ArrowMethod::kGeneric ? MethodChoice::kGeneric : MethodChoice::kLemma;
      if (!(arrows(r.witness->graph, t, h, choice, options) == v)) {
        problems.push_back("witness verdict does not reproduce");
      }
    }
    if (r.query.connected && !is_connected(r.witness->graph)) {
      problems.push_back("witness is not connected");
    }
  }
  if (r.conclusion.kind == ConclusionKind::kExact) {
    const int k = r.conclusion.lower;
    if (!r.witness || r.witness->graph.edge_count() != k) {
      problems.push_back("exact conclusion without a witness of that size");
    }
    for (int s = 0; s < k; ++s) {
      const auto it = std::find_if(r.per_size.begin(), r.per_size.end(),
                                   [s](const SizeRecord& x) { return x.edges == s; });
      if (it == r.per_size.end() || !it->all_admit_coloring) {
        problems.push_back("size " + std::to_string(s) + " below the exact value not refuted");
      }
    }
  }
  return problems;
}

inline void write_json(const Json& j, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ReportError("cannot write " + path);
  out << j.dump(2) << '\n';
  if (!out) throw ReportError("write failed for " + path);
}

inline Json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ReportError("cannot read " + path);
  return Json::parse(in);
}

}  // namespace arrowkit

#endif  // ARROWKIT_REPORT_IO_HPP_
