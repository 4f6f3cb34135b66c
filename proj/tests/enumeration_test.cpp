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

#include <set>

#include <gtest/gtest.h>

#include "arrowkit/canonical.hpp"
#include "arrowkit/containment.hpp"
#include "arrowkit/enumeration.hpp"
#include "arrowkit/graph.hpp"
#include "arrowkit/testing/oracles.hpp"

namespace arrowkit {
namespace {

EnumConstraints edges(int e, bool connected = false) {
  EnumConstraints c;
  c.edges = e;
  c.connected = connected;
  return c;
}

bool has_class(const std::vector<Graph>& graphs, const Graph& g) {
  for (const auto& x : graphs) {
    if (oracle::isomorphic(x, g)) return true;
  }
  return false;
}

TEST(EnumerationTest, OneEdge) {
  const auto graphs = enumerate_graphs(edges(1));
  ASSERT_EQ(graphs.size(), 1u);
  EXPECT_TRUE(oracle::isomorphic(graphs[0], make_path(2)));
}

TEST(EnumerationTest, ThreeEdges) {
  const auto all = enumerate_graphs(edges(3));
  ASSERT_EQ(all.size(), 5u);
  for (const Graph& g : {make_cycle(3), make_path(4), make_star(3),
                         disjoint_union(make_path(3), make_path(2)),
                         repeat_union(make_path(2), 3)}) {
    EXPECT_TRUE(has_class(all, g));
  }
  const auto connected = enumerate_graphs(edges(3, true));
  ASSERT_EQ(connected.size(), 3u);
  for (const Graph& g : {make_cycle(3), make_path(4), make_star(3)}) {
    EXPECT_TRUE(has_class(connected, g));
  }
}

TEST(EnumerationTest, SmallCounts) {
  EXPECT_EQ(count_graphs(edges(0)), 1);
  EXPECT_EQ(enumerate_graphs(edges(0))[0].order(), 0);
  EXPECT_EQ(count_graphs(edges(2)), 2);
  EXPECT_EQ(count_graphs(edges(4, true)),
            static_cast<std::int64_t>(oracle::connected_classes(4).size()));
}

TEST(EnumerationTest, MatchesLabeledOracleUpToFiveEdges) {
  EnumerationTree tree;
  for (int e = 0; e <= 5; ++e) {
    std::set<oracle::MultiCode> mine;
    const auto level = tree.level(e);
    for (const Graph& g : level) mine.insert(oracle::class_of(g));
    EXPECT_EQ(mine.size(), level.size()) << "duplicate class at " << e;
    EXPECT_EQ(mine, oracle::all_classes(e)) << e << " edges";
  }
}

// Graphs without isolated vertices, and connected ones, by edge count.
TEST(EnumerationTest, KnownSequences) {
  const std::vector<std::int64_t> all{1, 1, 2, 5, 11, 26, 68, 177, 497, 1476};
  const std::vector<std::int64_t> connected{1, 1, 1, 3, 5, 12, 30, 79, 227, 710};
  for (int e = 0; e <= 9; ++e) {
    EXPECT_EQ(count_graphs(edges(e)), all[e]) << e;
    EXPECT_EQ(count_graphs(edges(e, true)), connected[e]) << e;
  }
}

TEST(EnumerationTest, CodesDistinctAndDeterministic) {
  const auto a = enumerate_graphs(edges(8));
  const auto b = enumerate_graphs(edges(8));
  EXPECT_EQ(a, b);
  std::set<CanonicalCode> codes;
  for (const Graph& g : a) codes.insert(canonical_form(g));
  EXPECT_EQ(codes.size(), a.size());
}

TEST(EnumerationTest, ConstraintsHold) {
  EnumConstraints c = edges(8);
  c.min_degree = 2;
  c.girth_at_least = 4;
  c.max_order = 9;
  const auto graphs = enumerate_graphs(c);
  EXPECT_FALSE(graphs.empty());
  for (const Graph& g : graphs) {
    EXPECT_EQ(g.edge_count(), 8);
    EXPECT_GE(min_degree(g), 2);
    EXPECT_TRUE(girth_at_least(g, 4));
    EXPECT_LE(g.order(), 9);
    EXPECT_EQ(isolated_vertices(g), 0u);
  }
  // Filtering a plain level gives the same set.
  std::int64_t expected = 0;
  for (const Graph& g : enumerate_graphs(edges(8))) expected += satisfies(g, c) ? 1 : 0;
  EXPECT_EQ(static_cast<std::int64_t>(graphs.size()), expected);
}

TEST(EnumerationTest, ComponentContains) {
  EnumConstraints c = edges(6);
  c.component_contains = Pattern::path(4);
  for (const Graph& g : enumerate_graphs(c)) {
    for (const VertexMask comp : components(g)) {
      EXPECT_TRUE(contains_path(induced_subgraph(g, comp), 4));
    }
  }
}

TEST(EnumerationTest, GirthTreeMatchesFilter) {
  EnumerationTree limited(HereditaryLimits{std::nullopt, 6});
  EnumerationTree plain;
  for (int e = 0; e <= 8; ++e) {
    std::size_t filtered = 0;
    for (const Graph& g : plain.level(e)) filtered += girth_at_least(g, 6) ? 1 : 0;
    EXPECT_EQ(limited.level_size(e), filtered) << e;
  }
}

TEST(EnumerationTest, Budget) {
  EXPECT_THROW(enumerate_graphs(edges(10)), BudgetExceeded);
  EXPECT_THROW(enumerate_graphs(edges(12), EnumOptions{12}), BudgetExceeded);
  EXPECT_THROW(enumerate_graphs(edges(-1)), EnumerationError);
  EnumConstraints c = edges(3);
  c.max_order = 7;
  EXPECT_THROW(enumerate_graphs(c), EnumerationError);
}

TEST(EnumerationTest, DescribeEchoesConstraints) {
  EnumConstraints c = edges(5, true);
  c.girth_at_least = 4;
  EXPECT_EQ(c.describe(), "edges=5 connected girth>=4");
}

}  // namespace
}  // namespace arrowkit
