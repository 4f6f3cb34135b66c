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

// arrowkit command-line tool.
//
// Exit status: 0 computed (result as printed), 1 a verify-paper check
// failed, 2 usage or input error, 3 budget refusal.

#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "arrowkit/arrowing.hpp"
#include "arrowkit/audit.hpp"
#include "arrowkit/constructions.hpp"
#include "arrowkit/enumeration.hpp"
#include "arrowkit/graph6.hpp"
#include "arrowkit/parallel.hpp"
#include "arrowkit/pattern.hpp"
#include "arrowkit/ramsey.hpp"
#include "arrowkit/report_io.hpp"
#include "arrowkit/version.hpp"

namespace {

using namespace arrowkit;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

std::vector<Graph> load_graphs(const std::string& ref) {
  if (ref.starts_with("@")) {
    std::ifstream in(ref.substr(1));
    if (!in) throw std::invalid_argument("cannot open '" + ref.substr(1) + "'");
    auto graphs = read_graph6_lines(in);
    if (graphs.empty()) throw std::invalid_argument("no graphs in '" + ref.substr(1) + "'");
    return graphs;
  }
  return {decode_graph6(ref)};
}

void write_graph6_file(const std::string& path, const std::vector<Graph>& graphs) {
  std::ofstream out(path);
  if (!out) throw ReportError("cannot write " + path);
  for (const auto& g : graphs) out << encode_graph6(g) << '\n';
}

// Largest enumeration size allowed for this invocation.
void check_budget(int edges, bool allow_large) {
  if (edges > kMaxEnumBudget) {
    throw BudgetExceeded("at most " + std::to_string(kMaxEnumBudget) +
                         " edges can be enumerated");
  }
  if (edges > kDefaultEnumBudget && !allow_large) {
    throw BudgetExceeded(std::to_string(edges) + " edges exceeds the default budget of " +
                         std::to_string(kDefaultEnumBudget) + "; pass --allow-large");
  }
}

std::string red_text(const Coloring& c) {
  std::string s = "[";
  for (std::size_t i = 0; i < c.red.size(); ++i) {
    if (i) s += ",";
    s += "[" + std::to_string(c.red[i].first) + "," + std::to_string(c.red[i].second) + "]";
  }
  return s + "]";
}

struct CheckArgs {
  std::string graph;
  std::string left;
  std::string right;
  std::string method = "auto";
  std::string certificate;
  int max_edges = GenericOptions{}.max_edges;
};

int run_check(const CheckArgs& a) {
  const int t = parse_matching_size(a.left);
  const Pattern h = parse_pattern(a.right);
  const MethodChoice choice = a.method == "generic" ? MethodChoice::kGeneric
                              : a.method == "lemma" ? MethodChoice::kLemma
                                                    : MethodChoice::kAuto;
  Json certs = Json::array();
  for (const Graph& g : load_graphs(a.graph)) {
    const ArrowVerdict v = arrows(g, t, h, choice, GenericOptions{a.max_edges});
    std::cout << encode_graph6(g) << " arrows=" << (v.arrows ? "true" : "false")
              << " method=" << to_string(v.method);
    if (v.trace) {
      std::cout << " trace=" << to_string(v.trace->kind) << "{";
      for (std::size_t i = 0; i < v.trace->vertices.size(); ++i) {
        std::cout << (i ? "," : "") << v.trace->vertices[i];
      }
      std::cout << "}";
    }
    if (v.certificate) {
      std::cout << " red=" << red_text(*v.certificate) << " certificate="
                << to_string(verify_coloring(g, t, h, *v.certificate));
      certs.push_back(certificate_to_json(*v.certificate, t, h));
    }
    std::cout << '\n';
  }
  if (!a.certificate.empty()) {
    write_json(certs.size() == 1 ? certs[0] : certs, a.certificate);
  }
  return kExitOk;
}

struct SearchArgs {
  std::string left;
  std::string right;
  bool connected = false;
  int max_edges = 0;
  bool allow_large = false;
  std::string report;
};

int run_search(const SearchArgs& a) {
  const int t = parse_matching_size(a.left);
  const Pattern h = parse_pattern(a.right);
  check_budget(a.max_edges, a.allow_large);
  const SearchReport r = size_ramsey_exact(t, h, a.connected, a.max_edges);
  const std::string name = std::string(a.connected ? "rc" : "r") + "(" + a.left + "," +
                           h.to_string() + ")";
  for (const auto& s : r.per_size) {
    std::cout << "size " << s.edges << ": " << s.scanned << " hosts, "
              << (s.all_admit_coloring ? "all colorable" : "arrowing host found") << '\n';
  }
  if (r.witness) {
    std::cout << "witness " << encode_graph6(r.witness->graph) << " e="
              << r.witness->graph.edge_count() << " source=" << r.witness->source
              << " method=" << to_string(r.witness->verdict.method) << '\n';
  }
  switch (r.conclusion.kind) {
    case ConclusionKind::kExact:
      std::cout << name << " = " << r.conclusion.lower << " (exact)\n";
      break;
    case ConclusionKind::kInterval:
      std::cout << name << " in [" << r.conclusion.lower << ", " << *r.conclusion.upper
                << "]\n";
      break;
    case ConclusionKind::kBudgetExhausted:
      std::cout << name << " >= " << r.conclusion.lower << " (budget exhausted)\n";
      break;
  }
  const BoundsRecord b = closed_form_bounds(t, h, a.connected);
  for (const auto& e : b.bounds) {
    std::cout << "  bound " << to_string(e.kind) << " " << e.value << " [" << e.source << "]"
              << (e.best ? " best" : "") << '\n';
  }
  if (!a.report.empty()) write_json(report_to_json(r), a.report);
  return kExitOk;
}

int run_construct(const std::string& family, const std::string& out) {
  const Graph g = build_family(parse_family(family));
  std::cout << encode_graph6(g) << '\n';
  std::cerr << "n=" << g.order() << " e=" << g.edge_count() << '\n';
  if (!out.empty()) write_graph6_file(out, {g});
  return kExitOk;
}

struct WitnessArgs {
  std::string left;
  std::string right;
  int size = 0;
  std::string family = "chorded";
  std::string chords = "0..4";
  std::optional<int> girth;
  std::string out;
};

int run_find_witness(const WitnessArgs& a) {
  if (a.family != "chorded") throw std::invalid_argument("only --family chorded is supported");
  const int t = parse_matching_size(a.left);
  const Pattern h = parse_pattern(a.right);
  const auto dots = a.chords.find("..");
  if (dots == std::string::npos) throw std::invalid_argument("--chords expects A..B");
  const int lo = std::stoi(a.chords.substr(0, dots));
  const int hi = std::stoi(a.chords.substr(dots + 2));
  const WitnessSearchResult r = witness_search(a.size, lo, hi, arrowing_checker(t, h, a.girth));
  for (const auto& s : r.scans) {
    std::cout << "C" << s.cycle_length << " + " << s.chords << " chords: " << s.representatives
              << " representatives of " << s.placements << " placements\n";
  }
  if (!r.found()) {
    std::cout << "no witness of size " << a.size << " in the chorded-cycle family\n";
    return kExitOk;
  }
  std::cout << "witness " << chorded_spec_string(*r.family) << " " << encode_graph6(*r.graph)
            << " method=" << to_string(r.verdict->method) << '\n';
  if (!a.out.empty()) write_graph6_file(a.out, {*r.graph});
  return kExitOk;
}

int run_verify(bool quick, const std::string& report, const std::vector<int>& only) {
  Audit audit(AuditOptions{quick});
  std::vector<AuditResult> results;
  auto emit = [&](const AuditResult& r) {
    std::cout << format_result(r) << std::endl;
    results.push_back(r);
  };
  if (only.empty()) {
    audit.run_all(emit);
  } else {
    for (const int id : only) emit(audit.run(id));
  }
  int passed = 0;
  for (const auto& r : results) passed += r.passed ? 1 : 0;
  std::cout << passed << "/" << results.size() << " checks passed\n";
  if (!report.empty()) write_json(audit_to_json(results, quick), report);
  return passed == static_cast<int>(results.size()) ? kExitOk : kExitVerifyFailed;
}

struct EnumArgs {
  int edges = 0;
  bool connected = false;
  std::optional<int> min_degree;
  std::optional<int> girth;
  bool allow_large = false;
  std::string out;
};

int run_enum(const EnumArgs& a) {
  check_budget(a.edges, a.allow_large);
  EnumConstraints c;
  c.edges = a.edges;
  c.connected = a.connected;
  c.min_degree = a.min_degree;
  c.girth_at_least = a.girth;
  const auto graphs = enumerate_graphs(c, EnumOptions{kMaxEnumBudget});
  std::cerr << "# " << c.describe() << ": " << graphs.size() << " graphs\n";
  if (a.out.empty()) {
    for (const auto& g : graphs) std::cout << encode_graph6(g) << '\n';
  } else {
    write_graph6_file(a.out, graphs);
    std::cout << graphs.size() << '\n';
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Size Ramsey numbers of matchings versus paths, cycles and path unions"};
  app.set_version_flag("--version", std::string(kToolVersion));
  app.require_subcommand(1);
  int threads = 0;
  app.add_option("--threads", threads, "worker threads (default: ARROW_THREADS or all cores)")
      ->check(CLI::NonNegativeNumber);

  CheckArgs check;
  auto* c = app.add_subcommand("check", "decide F -> (tK2, H) for one or more graphs");
  c->add_option("--graph", check.graph, "graph6 string or @file")->required();
  c->add_option("--left", check.left, "M<t>")->required();
  c->add_option("--right", check.right, "P<m> | C<n> | <n>P<m> | M<t>")->required();
  c->add_option("--method", check.method)
      ->check(CLI::IsMember({"auto", "generic", "lemma"}));
  c->add_option("--certificate", check.certificate, "write certificate JSON here");
  c->add_option("--generic-max-edges", check.max_edges, "edge budget of the coloring search")
      ->check(CLI::PositiveNumber);

  SearchArgs search;
  auto* s = app.add_subcommand("search-min", "smallest arrowing host by exhaustive search");
  s->add_option("--left", search.left)->required();
  s->add_option("--right", search.right)->required();
  s->add_flag("--connected", search.connected);
  s->add_option("--max-edges", search.max_edges, "largest size to enumerate")
      ->required()
      ->check(CLI::NonNegativeNumber);
  s->add_flag("--allow-large", search.allow_large,
              "permit budgets above the default (at most 11)");
  s->add_option("--report", search.report, "write the search report JSON here");

  std::string family;
  std::string construct_out;
  auto* k = app.add_subcommand("construct", "build a graph family member");
  k->add_option("--family", family, "e.g. fig1a:2,3 or chorded:15+{(0,5),(1,10)}")
      ->required();
  k->add_option("--out", construct_out, "write graph6 here");

  WitnessArgs witness;
  auto* w = app.add_subcommand("find-witness", "search chorded cycles for an arrowing host");
  w->add_option("--left", witness.left)->required();
  w->add_option("--right", witness.right)->required();
  w->add_option("--size", witness.size)->required()->check(CLI::PositiveNumber);
  w->add_option("--family", witness.family)->check(CLI::IsMember({"chorded"}));
  w->add_option("--chords", witness.chords, "chord count range A..B within 0..4");
  w->add_option("--girth", witness.girth, "only hosts with girth at least this");
  w->add_option("--out", witness.out, "write the witness graph6 here");

  bool quick = false;
  std::string verify_report;
  std::vector<int> only;
  auto* v = app.add_subcommand("verify-paper", "run the reproduction checks");
  v->add_flag("--quick", quick, "sub-minute subset");
  v->add_option("--report", verify_report, "write results JSON here");
  v->add_option("--only", only, "run just these check numbers")
      ->check(CLI::Range(1, kAuditCriteria));

  EnumArgs en;
  auto* e = app.add_subcommand("enum", "list graphs with a given number of edges");
  e->add_option("--edges", en.edges)->required()->check(CLI::NonNegativeNumber);
  e->add_flag("--connected", en.connected);
  e->add_option("--min-degree", en.min_degree);
  e->add_option("--girth", en.girth, "girth at least");
  e->add_flag("--allow-large", en.allow_large, "permit more than the default budget");
  e->add_option("--out", en.out, "write graph6 lines here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int code = app.exit(err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  if (threads > 0) set_worker_count(threads);

  try {
    if (*c) return run_check(check);
    if (*s) return run_search(search);
    if (*k) return run_construct(family, construct_out);
    if (*w) return run_find_witness(witness);
    if (*v) return run_verify(quick, verify_report, only);
    if (*e) return run_enum(en);
  } catch (const BudgetExceeded& err) {
    std::cerr << "budget refusal: " << err.what() << '\n';
    return kExitBudget;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
