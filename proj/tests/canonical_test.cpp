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

#include <map>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "arrowkit/canonical.hpp"
#include "arrowkit/enumeration.hpp"
#include "arrowkit/graph.hpp"
#include "arrowkit/testing/oracles.hpp"

namespace arrowkit {
namespace {

TEST(CanonicalTest, RelabeledCycleSameCode) {
  const Graph a = make_cycle(4);
  const Graph b = graph_from_edges(4, {{0, 2}, {2, 1}, {1, 3}, {3, 0}});
  EXPECT_EQ(canonical_form(a), canonical_form(b));
}

TEST(CanonicalTest, PathAndStarDiffer) {
  EXPECT_NE(canonical_form(make_path(4)), canonical_form(make_star(3)));
}

TEST(CanonicalTest, ThreeEdgeClassesMatchOracle) {
  // Every labeled 3-edge graph without isolated vertices on <= 6 vertices.
  std::set<CanonicalCode> codes;
  std::set<oracle::Code> truth;
  for (int n = 2; n <= 6; ++n) {
    std::vector<Edge> slots;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) slots.push_back({i, j});
    }
    const int s = static_cast<int>(slots.size());
    for (int a = 0; a < s; ++a) {
      for (int b = a + 1; b < s; ++b) {
        for (int c = b + 1; c < s; ++c) {
          const Graph g = graph_from_edges(n, {slots[a], slots[b], slots[c]});
          if (isolated_vertices(g) != 0) continue;
          codes.insert(canonical_form(g));
          truth.insert(oracle::permutation_canonical(g));
        }
      }
    }
  }
  EXPECT_EQ(truth.size(), 5u);
  EXPECT_EQ(codes.size(), 5u);
}

TEST(CanonicalTest, OrbitConstancy) {
  std::mt19937 rng(2026);
  std::uniform_int_distribution<int> order(0, 14);
  std::uniform_real_distribution<double> density(0.05, 0.8);
  for (int i = 0; i < 1000; ++i) {
    const Graph g = oracle::random_graph(order(rng), density(rng), rng);
    const CanonicalCode code = canonical_form(g);
    for (int k = 0; k < 10; ++k) {
      ASSERT_EQ(canonical_form(relabel(g, oracle::random_permutation(g.order(), rng))), code);
    }
  }
}

TEST(CanonicalTest, OrbitConstancyOnSymmetricGraphs) {
  std::mt19937 rng(5);
  const std::vector<Graph> graphs{
      make_cycle(12), make_complete(7), repeat_union(make_cycle(5), 3),
      repeat_union(make_complete(3), 4), disjoint_union(make_cycle(6), make_cycle(6)),
      // Petersen graph
      graph_from_edges(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}, {1, 6}, {2, 7},
                            {3, 8}, {4, 9}, {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}})};
  for (const Graph& g : graphs) {
    const CanonicalCode code = canonical_form(g);
    for (int k = 0; k < 20; ++k) {
      EXPECT_EQ(canonical_form(relabel(g, oracle::random_permutation(g.order(), rng))), code);
    }
  }
}

TEST(CanonicalTest, SeparatesUpToFiveEdges) {
  std::mt19937 rng(9);
  std::map<CanonicalCode, oracle::MultiCode> by_code;
  std::map<oracle::MultiCode, CanonicalCode> by_class;
  EnumerationTree tree;
  for (int e = 0; e <= 5; ++e) {
    for (const Graph& g : tree.level(e)) {
      for (int k = 0; k < 5; ++k) {
        const Graph h = relabel(g, oracle::random_permutation(g.order(), rng));
        const CanonicalCode code = canonical_form(h);
        const auto cls = oracle::class_of(h);
        by_code.emplace(code, cls);
        by_class.emplace(cls, code);
        EXPECT_EQ(by_code.at(code), cls);
        EXPECT_EQ(by_class.at(cls), code);
      }
    }
  }
}

TEST(CanonicalTest, AgreesWithBacktrackingIsomorphism) {
  std::mt19937 rng(13);
  for (int i = 0; i < 400; ++i) {
    const int n = 1 + static_cast<int>(rng() % 8);
    const Graph a = oracle::random_graph(n, 0.4, rng);
    const Graph b = oracle::random_graph(n, 0.4, rng);
    EXPECT_EQ(isomorphic(a, b), oracle::isomorphic(a, b));
  }
}

TEST(CanonicalTest, AutomorphismGeneratorsAreAutomorphisms) {
  std::mt19937 rng(17);
  for (int i = 0; i < 200; ++i) {
    const Graph g = oracle::random_graph(1 + static_cast<int>(rng() % 10), 0.3, rng);
    const CanonicalLabeling lab = canonical_labeling(g);
    for (const auto& a : lab.automorphisms) {
      EXPECT_EQ(relabel(g, a), g);
    }
    EXPECT_EQ(canonical_form(canonical_graph(g)), lab.code);
  }
}

TEST(CanonicalTest, EdgeOrbitOfCycleIsAllEdges) {
  const Graph c = make_cycle(8);
  const CanonicalLabeling lab = canonical_labeling(c);
  EXPECT_EQ(edge_orbit({0, 1}, lab.automorphisms).size(), 8u);
  const Graph p = make_path(4);
  const auto orbit = edge_orbit({1, 2}, canonical_labeling(p).automorphisms);
  EXPECT_EQ(orbit.size(), 1u);
}

TEST(CanonicalTest, ColorsArePartOfTheCode) {
  const Graph p = make_path(3);
  const std::vector<int> end_red{1, 0, 0};
  const std::vector<int> other_end_red{0, 0, 1};
  const std::vector<int> middle_red{0, 1, 0};
  EXPECT_EQ(canonical_labeling(p, end_red).code, canonical_labeling(p, other_end_red).code);
  EXPECT_NE(canonical_labeling(p, end_red).code, canonical_labeling(p, middle_red).code);
  EXPECT_THROW(canonical_labeling(p, std::vector<int>{1}), GraphError);
}

}  // namespace
}  // namespace arrowkit
