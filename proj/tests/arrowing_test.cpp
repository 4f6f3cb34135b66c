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

#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "arrowkit/arrowing.hpp"
#include "arrowkit/enumeration.hpp"
#include "arrowkit/graph.hpp"
#include "arrowkit/graph6.hpp"
#include "arrowkit/pattern.hpp"
#include "arrowkit/testing/oracles.hpp"

namespace arrowkit {
namespace {

const Pattern kP3 = Pattern::path(3);

void expect_sound(const ArrowVerdict& v) {
  if (v.arrows) return;
  ASSERT_TRUE(v.certificate.has_value());
  EXPECT_EQ(verify_coloring(v.host, v.t, v.h, *v.certificate), ColoringStatus::kValid);
}

TEST(VerifyColoringTest, Examples) {
  const Graph k3 = make_complete(3);
  EXPECT_EQ(verify_coloring(k3, 2, kP3, make_coloring(k3, k3.edges())), ColoringStatus::kValid);
  const Graph c7 = make_cycle(7);
  EXPECT_EQ(verify_coloring(c7, 2, Pattern::path(6), color_edges_meeting(c7, bit(0))),
            ColoringStatus::kBlueViolation);
  const Graph c4 = make_cycle(4);
  EXPECT_EQ(verify_coloring(c4, 2, kP3, make_coloring(c4, {{0, 1}, {2, 3}})),
            ColoringStatus::kRedViolation);
}

TEST(VerifyColoringTest, RejectsForeignEdges) {
  const Graph p = make_path(3);
  EXPECT_THROW(verify_coloring(p, 2, kP3, make_coloring(p, {{0, 2}})), ArrowingError);
  EXPECT_THROW(verify_coloring(p, 2, kP3, make_coloring(make_path(4), {})), ArrowingError);
}

TEST(GenericTest, Examples) {
  EXPECT_TRUE(arrows_generic(make_cycle(4), 2, kP3).arrows);
  const ArrowVerdict k3 = arrows_generic(make_complete(3), 2, kP3);
  EXPECT_FALSE(k3.arrows);
  expect_sound(k3);
  const ArrowVerdict p4 = arrows_generic(make_path(4), 2, kP3);
  EXPECT_FALSE(p4.arrows);
  expect_sound(p4);
  EXPECT_FALSE(oracle::arrows_by_all_colorings(make_path(4), 2, kP3.to_graph()));
}

TEST(GenericTest, BudgetRefusal) {
  EXPECT_THROW(arrows_generic(make_complete(9), 2, kP3), BudgetExceeded);
  EXPECT_NO_THROW(arrows_generic(make_cycle(8), 2, kP3, GenericOptions{8}));
  EXPECT_THROW(arrows_generic(make_cycle(8), 2, kP3, GenericOptions{7}), BudgetExceeded);
}

// The coloring search against trying all 2^e colorings.
TEST(GenericTest, AgreesWithAllColorings) {
  const std::vector<Pattern> targets{Pattern::path(2), Pattern::path(3), Pattern::path(4),
                                     Pattern::path(5), Pattern::cycle(3), Pattern::cycle(4),
                                     Pattern::path_union(2, 2), Pattern::path_union(2, 3),
                                     Pattern::matching(2)};
  EnumerationTree tree;
  for (int e = 0; e <= 6; ++e) {
    for (const Graph& g : tree.level(e)) {
      for (int t = 1; t <= 3; ++t) {
        for (const auto& h : targets) {
          const ArrowVerdict v = arrows_generic(g, t, h);
          ASSERT_EQ(v.arrows, oracle::arrows_by_all_colorings(g, t, h.to_graph()))
              << encode_graph6(g) << " t=" << t << " " << h.to_string();
          expect_sound(v);
        }
      }
    }
  }
}

TEST(Lemma2K2Test, Examples) {
  const Pattern two_p3 = Pattern::path_union(2, 3);
  const ArrowVerdict c7 = arrows_2k2_lemma(make_cycle(7), two_p3);
  EXPECT_TRUE(c7.arrows);
  EXPECT_EQ(c7.method, ArrowMethod::kLemma2K2);
  EXPECT_TRUE(arrows_2k2_lemma(repeat_union(make_path(4), 3), Pattern::path_union(2, 4)).arrows);
  const ArrowVerdict k3 = arrows_2k2_lemma(make_complete(3), kP3);
  EXPECT_FALSE(k3.arrows);
  ASSERT_TRUE(k3.trace.has_value());
  EXPECT_EQ(k3.trace->kind, DeletionTrace::Kind::kTriangle);
  EXPECT_EQ(k3.trace->vertices, (std::vector<int>{0, 1, 2}));
  expect_sound(k3);
}

TEST(Lemma2K2Test, TriangleDeletionRemovesEdgesOnly) {
  // K4 arrows (2K2, P3): deleting a triangle's edges leaves a star K_{1,3}.
  EXPECT_TRUE(arrows_2k2_lemma(make_complete(4), kP3).arrows);
  EXPECT_TRUE(arrows_generic(make_complete(4), 2, kP3).arrows);
}

TEST(Lemma2K2Test, AgreesWithGenericUpToSixEdges) {
  const std::vector<Pattern> targets{Pattern::path(3),  Pattern::path(4),
                                     Pattern::path(5),  Pattern::path(6),
                                     Pattern::path_union(2, 3), Pattern::cycle(3),
                                     Pattern::cycle(4), Pattern::cycle(5)};
  EnumerationTree tree;
  for (int e = 0; e <= 6; ++e) {
    for (const Graph& g : tree.level(e)) {
      for (const auto& h : targets) {
        const ArrowVerdict lemma = arrows_2k2_lemma(g, h);
        ASSERT_EQ(lemma.arrows, arrows_generic(g, 2, h).arrows) << encode_graph6(g);
        expect_sound(lemma);
      }
    }
  }
}

TEST(Lemma2K2Test, RequiresPatternWithoutIsolatedVertices) {
  EXPECT_THROW(arrows_2k2_lemma(make_cycle(4), Pattern::path(1)), PreconditionError);
}

TEST(Lemma3K2Test, Examples) {
  const ArrowVerdict c10 = arrows_3k2_lemma(make_cycle(10), kP3);
  EXPECT_TRUE(c10.arrows);
  EXPECT_EQ(c10.method, ArrowMethod::kLemma3K2);
  const ArrowVerdict c8 = arrows_3k2_lemma(make_cycle(8), Pattern::path(7));
  EXPECT_FALSE(c8.arrows);
  ASSERT_TRUE(c8.trace.has_value());
  EXPECT_EQ(c8.trace->kind, DeletionTrace::Kind::kPair);
  EXPECT_EQ(c8.trace->vertices.size(), 2u);
  expect_sound(c8);
  // Deleting an antipodal pair leaves two arcs of three vertices.
  EXPECT_FALSE(contains_path(delete_vertices(make_cycle(8), bit(0) | bit(4)), 7));
}

TEST(Lemma3K2Test, Precondition) {
  EXPECT_THROW(arrows_3k2_lemma(make_cycle(5), kP3), PreconditionError);
  EXPECT_THROW(arrows_3k2_lemma(make_complete(4), kP3), PreconditionError);
  EXPECT_NO_THROW(arrows_3k2_lemma(make_star(5), kP3));
  EXPECT_NO_THROW(arrows_3k2_lemma(make_cycle(6), kP3));
}

TEST(Lemma3K2Test, AgreesWithGenericUpToEightEdges) {
  EnumerationTree tree(HereditaryLimits{std::nullopt, 6});
  for (int e = 0; e <= 8; ++e) {
    for (const Graph& g : tree.level(e)) {
      for (int m = 3; m <= 6; ++m) {
        const ArrowVerdict lemma = arrows_3k2_lemma(g, Pattern::path(m));
        ASSERT_EQ(lemma.arrows, arrows_generic(g, 3, Pattern::path(m)).arrows)
            << encode_graph6(g);
        expect_sound(lemma);
      }
    }
  }
}

TEST(DispatchTest, ChoosesMethod) {
  EXPECT_EQ(arrows(make_cycle(7), 2, Pattern::path_union(2, 3)).method, ArrowMethod::kLemma2K2);
  EXPECT_TRUE(arrows(make_cycle(7), 2, Pattern::path_union(2, 3)).arrows);
  EXPECT_EQ(arrows(make_cycle(10), 3, kP3).method, ArrowMethod::kLemma3K2);
  EXPECT_EQ(arrows(make_complete(4), 3, kP3).method, ArrowMethod::kGeneric);
  EXPECT_EQ(arrows(make_cycle(4), 4, kP3).method, ArrowMethod::kGeneric);
  EXPECT_EQ(arrows(make_cycle(4), 2, kP3, MethodChoice::kGeneric).method, ArrowMethod::kGeneric);
  EXPECT_THROW(arrows(make_complete(4), 3, kP3, MethodChoice::kLemma), PreconditionError);
  EXPECT_THROW(arrows(make_cycle(4), 4, kP3, MethodChoice::kLemma), PreconditionError);
}

TEST(DispatchTest, SupergraphsStillArrow) {
  std::mt19937 rng(31);
  const Graph base = make_cycle(5);
  ASSERT_TRUE(arrows(base, 2, Pattern::path(4)).arrows);
  for (int i = 0; i < 100; ++i) {
    Graph g = base.with_isolated(static_cast<int>(rng() % 3));
    for (int k = 0; k < 4; ++k) {
      const int u = static_cast<int>(rng() % g.order());
      const int v = static_cast<int>(rng() % g.order());
      if (u != v) g.add_edge_unchecked(u, v);
    }
    EXPECT_TRUE(arrows(g, 2, Pattern::path(4)).arrows);
    EXPECT_TRUE(arrows_generic(g, 2, Pattern::path(4)).arrows);
  }
}

TEST(AdversaryTest, Examples) {
  const AdversaryColoring k3 = adversarial_coloring_connected(make_complete(3), 1, 3);
  EXPECT_EQ(k3.coloring.red.size(), 2u);
  EXPECT_EQ(k3.coloring.blue_graph().edge_count(), 1);
  EXPECT_EQ(verify_coloring(make_complete(3), 2, kP3, k3.coloring), ColoringStatus::kValid);
  const AdversaryColoring p4 = adversarial_coloring_connected(make_path(4), 1, 3);
  EXPECT_EQ(p4.pivot, 1);  // lowest vertex next to a leaf
  EXPECT_EQ(verify_coloring(make_path(4), 2, kP3, p4.coloring), ColoringStatus::kValid);
}

TEST(AdversaryTest, Preconditions) {
  EXPECT_THROW(adversarial_coloring_connected(repeat_union(make_path(2), 2), 1, 3),
               PreconditionError);
  EXPECT_THROW(adversarial_coloring_connected(make_cycle(4), 1, 3), PreconditionError);
}

TEST(AdversaryTest, RandomConnectedHosts) {
  std::mt19937 rng(41);
  for (const auto& [n, m] : {std::pair{2, 3}, {2, 4}, {3, 3}, {1, 5}, {3, 4}}) {
    const int e = n * m;
    int low = 1;
    while (low * (low - 1) / 2 < e) ++low;
    for (int i = 0; i < 500; ++i) {
      const int order = low + static_cast<int>(rng() % (e + 2 - low));
      const Graph g = oracle::random_connected(order, e, rng);
      const AdversaryColoring a = adversarial_coloring_connected(g, n, m);
      ASSERT_EQ(verify_coloring(g, 2, Pattern::path_union(n, m), a.coloring),
                ColoringStatus::kValid)
          << encode_graph6(g);
      EXPECT_EQ(a.degree, g.degree(a.pivot));
    }
  }
}

TEST(ComposeTest, TwoSquares) {
  const ArrowVerdict c4 = arrows(make_cycle(4), 2, kP3);
  const std::vector<ArrowVerdict> parts{c4, c4};
  const ComposedArrowing both = compose_union_arrowing(parts);
  EXPECT_TRUE(both.verdict.arrows);
  EXPECT_EQ(both.verdict.method, ArrowMethod::kComposed);
  EXPECT_EQ(both.verdict.t, 4);
  EXPECT_FALSE(both.verdict.certificate.has_value());
  EXPECT_EQ(both.host.edge_count(), 8);
  EXPECT_TRUE(arrows_generic(both.host, 4, kP3).arrows);
}

TEST(ComposeTest, SinglePartUnchanged) {
  const ArrowVerdict c4 = arrows(make_cycle(4), 2, kP3);
  const std::vector<ArrowVerdict> parts{c4};
  const ComposedArrowing one = compose_union_arrowing(parts);
  EXPECT_EQ(one.verdict, c4);
}

TEST(ComposeTest, RejectsBadParts) {
  const ArrowVerdict yes = arrows(make_cycle(4), 2, kP3);
  const ArrowVerdict no = arrows(make_path(4), 2, kP3);
  const ArrowVerdict other = arrows(make_cycle(5), 2, Pattern::path(4));
  EXPECT_THROW(compose_union_arrowing(std::vector<ArrowVerdict>{}), ArrowingError);
  EXPECT_THROW(compose_union_arrowing(std::vector<ArrowVerdict>{yes, no}), ArrowingError);
  EXPECT_THROW(compose_union_arrowing(std::vector<ArrowVerdict>{yes, other}), ArrowingError);
}

TEST(ComposeTest, ConfirmedByGenericSearch) {
  const ArrowVerdict a = arrows(make_cycle(4), 2, kP3);
  const ArrowVerdict b = arrows(make_complete(4), 2, kP3);
  const ComposedArrowing both = compose_union_arrowing(std::vector<ArrowVerdict>{a, b});
  EXPECT_TRUE(arrows_generic(both.host, 4, kP3).arrows);
}

TEST(PartsTest, AgreesWithWholeHost) {
  std::mt19937 rng(43);
  for (int i = 0; i < 200; ++i) {
    std::vector<Graph> parts;
    Graph whole;
    const int count = 1 + static_cast<int>(rng() % 3);
    for (int k = 0; k < count; ++k) {
      parts.push_back(oracle::random_graph(2 + static_cast<int>(rng() % 5), 0.5, rng));
      whole = disjoint_union(whole, parts.back());
    }
    for (const auto& h : {Pattern::path(3), Pattern::path(4), Pattern::path_union(2, 3)}) {
      EXPECT_EQ(arrows_2k2_lemma_parts(parts, h).arrows, arrows_2k2_lemma(whole, h).arrows);
    }
  }
}

TEST(PartsTest, SpareCopyBeyondVertexCap) {
  const std::vector<Graph> parts(5, make_path(7));
  EXPECT_TRUE(arrows_2k2_lemma_parts(parts, Pattern::path_union(4, 7)).arrows);
  const std::vector<Graph> short_parts(4, make_path(7));
  EXPECT_FALSE(arrows_2k2_lemma_parts(short_parts, Pattern::path_union(4, 7)).arrows);
  EXPECT_THROW(arrows_2k2_lemma_parts(parts, Pattern::cycle(5)), PreconditionError);
}

}  // namespace
}  // namespace arrowkit
