#include "relaxcol/outer_embedding.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "oracles.h"
#include "relaxcol/errors.h"
#include "relaxcol/families.h"
#include "relaxcol/graph.h"

namespace relaxcol {
namespace {

Graph CompleteBipartite(int a, int b) {
  Graph g(a + b);
  for (int i = 0; i < a; ++i) {
    for (int j = 0; j < b; ++j) g.AddEdge(i, a + j);
  }
  return g;
}

TEST(OuterEmbedding, CycleOnCircleIsValid) {
  EXPECT_TRUE(ValidateOuterEmbedding(MakeFamily(GraphFamily::kCycle, 4),
                                     OuterEmbedding{{0, 1, 2, 3}}));
  EXPECT_FALSE(ValidateOuterEmbedding(MakeFamily(GraphFamily::kCycle, 4),
                                      OuterEmbedding{{0, 2, 1, 3}}));
}

TEST(OuterEmbedding, K4HasNoValidOrder) {
  const Graph k4 = MakeFamily(GraphFamily::kComplete, 4);
  std::vector<Vertex> order = {0, 1, 2, 3};
  do {
    EXPECT_FALSE(ValidateOuterEmbedding(k4, OuterEmbedding{order}));
  } while (std::next_permutation(order.begin(), order.end()));
  EXPECT_FALSE(FindOuterEmbedding(k4).has_value());
}

TEST(OuterEmbedding, G5ExteriorOrderIsValid) {
  const EmbeddedGraph g5 = GenG5();
  EXPECT_TRUE(ValidateOuterEmbedding(g5.graph, g5.embedding));
}

TEST(OuterEmbedding, RejectsNonPermutations) {
  const Graph g = MakeFamily(GraphFamily::kPath, 3);
  EXPECT_THROW(ValidateOuterEmbedding(g, OuterEmbedding{{0, 1}}),
               InvalidInputError);
  EXPECT_THROW(ValidateOuterEmbedding(g, OuterEmbedding{{0, 1, 1}}),
               InvalidInputError);
  EXPECT_THROW(ValidateOuterEmbedding(g, OuterEmbedding{{0, 1, 3}}),
               InvalidInputError);
}

TEST(OuterEmbedding, PathGetsIdentityOrder) {
  const auto emb = FindOuterEmbedding(MakeFamily(GraphFamily::kPath, 3));
  ASSERT_TRUE(emb.has_value());
  EXPECT_EQ(emb->order, (std::vector<Vertex>{0, 1, 2}));
}

TEST(OuterEmbedding, K23IsNotOuterplanar) {
  EXPECT_FALSE(FindOuterEmbedding(CompleteBipartite(2, 3)).has_value());
  EXPECT_TRUE(FindOuterEmbedding(CompleteBipartite(2, 2)).has_value());
}

TEST(OuterEmbedding, TriangleOrderIsValid) {
  const EmbeddedGraph h0 = GenH(0);
  EXPECT_TRUE(ValidateOuterEmbedding(h0.graph, h0.embedding));
  EXPECT_TRUE(FindOuterEmbedding(h0.graph).has_value());
}

TEST(OuterEmbedding, DisconnectedGraphsConcatenateComponents) {
  Graph g(5);
  g.AddEdge(0, 3);
  g.AddEdge(1, 4);
  g.AddEdge(4, 2);
  const auto emb = FindOuterEmbedding(g);
  ASSERT_TRUE(emb.has_value());
  EXPECT_EQ(emb->order, (std::vector<Vertex>{0, 3, 1, 4, 2}));
  EXPECT_TRUE(ValidateOuterEmbedding(g, *emb));
}

TEST(OuterEmbedding, InvariantUnderRotationAndReflection) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const EmbeddedGraph eg = RandomOuterplanar(9, 0.6, rng());
    std::vector<Vertex> order = eg.embedding.order;
    std::shuffle(order.begin(), order.end(), rng);
    const bool valid = ValidateOuterEmbedding(eg.graph, OuterEmbedding{order});
    for (int r = 0; r < 9; ++r) {
      std::rotate(order.begin(), order.begin() + 1, order.end());
      EXPECT_EQ(ValidateOuterEmbedding(eg.graph, OuterEmbedding{order}), valid);
    }
    std::reverse(order.begin(), order.end());
    EXPECT_EQ(ValidateOuterEmbedding(eg.graph, OuterEmbedding{order}), valid);
  }
}

TEST(OuterEmbedding, RestrictKeepsRelativeOrder) {
  const OuterEmbedding emb{{3, 0, 4, 1, 2}};
  const std::vector<Vertex> keep = {1, 3, 4};
  EXPECT_EQ(RestrictEmbedding(emb, keep, 5).order,
            (std::vector<Vertex>{1, 2, 0}));
}

// The search agrees with trying every cyclic order: exhaustively up to six
// vertices, on a sample of seven-vertex graphs.
TEST(OuterEmbedding, AgreesWithBruteForce) {
  for (int n = 1; n <= 6; ++n) {
    for (std::uint64_t mask = 0; mask < (1ull << oracle::Pairs(n)); ++mask) {
      const Graph g = GraphFromPairMask(n, mask);
      const auto emb = FindOuterEmbedding(g);
      ASSERT_EQ(emb.has_value(), oracle::HasOuterEmbedding(g))
          << "n=" << n << " mask=" << mask;
      if (emb) EXPECT_TRUE(ValidateOuterEmbedding(g, *emb));
    }
  }
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::uint64_t> pick(0, (1ull << 21) - 1);
  for (int i = 0; i < 300; ++i) {
    const std::uint64_t mask = pick(rng);
    const Graph g = GraphFromPairMask(7, mask);
    const auto emb = FindOuterEmbedding(g);
    ASSERT_EQ(emb.has_value(), oracle::HasOuterEmbedding(g)) << mask;
    if (emb) EXPECT_TRUE(ValidateOuterEmbedding(g, *emb));
  }
}

TEST(OuterEmbedding, FindsOrdersForLargeOuterplanarGraphs) {
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    const EmbeddedGraph eg = RandomOuterplanar(300, 0.5, seed);
    const auto emb = FindOuterEmbedding(eg.graph);
    ASSERT_TRUE(emb.has_value());
    EXPECT_TRUE(ValidateOuterEmbedding(eg.graph, *emb));
  }
}

TEST(OuterEmbedding, TreesAndRelabeledOuterplanarGraphs) {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 200; ++i) {
    const int n = 2 + static_cast<int>(rng() % 80);
    Graph tree(n);
    for (Vertex v = 1; v < n; ++v) {
      tree.AddEdge(static_cast<Vertex>(rng() % v), v);
    }
    const auto emb = FindOuterEmbedding(tree);
    ASSERT_TRUE(emb.has_value());
    EXPECT_TRUE(ValidateOuterEmbedding(tree, *emb));

    // Shuffle the ids of an outerplanar graph so the identity is no hint.
    const EmbeddedGraph eg = RandomOuterplanar(std::max(n, 3), 0.7, rng());
    std::vector<Vertex> perm(eg.graph.num_vertices());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    Graph shuffled(eg.graph.num_vertices());
    for (const Edge& e : eg.graph.edges()) {
      shuffled.AddEdge(perm[e.first], perm[e.second]);
    }
    const auto found = FindOuterEmbedding(shuffled);
    ASSERT_TRUE(found.has_value());
    EXPECT_TRUE(ValidateOuterEmbedding(shuffled, *found));
  }
}

TEST(OuterEmbedding, BlocksJoinedAtCutVertices) {
  // Two triangles and a square sharing vertex 0, plus a pendant path.
  Graph g(9);
  for (auto [u, v] : {std::pair{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4},
                      {4, 0}, {0, 5}, {5, 6}, {6, 7}, {7, 0}, {6, 8}}) {
    g.AddEdge(u, v);
  }
  const auto emb = FindOuterEmbedding(g);
  ASSERT_TRUE(emb.has_value());
  EXPECT_TRUE(ValidateOuterEmbedding(g, *emb));
  g = Graph(6);
  // K_4 hanging off a path is not outerplanar.
  for (auto [u, v] : {std::pair{0, 1}, {1, 2}, {1, 3}, {1, 4}, {2, 3},
                      {2, 4}, {3, 4}, {4, 5}}) {
    g.AddEdge(u, v);
  }
  EXPECT_FALSE(FindOuterEmbedding(g).has_value());
}

}  // namespace
}  // namespace relaxcol
