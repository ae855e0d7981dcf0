#include "relaxcol/solver.h"

#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "oracles.h"
#include "relaxcol/errors.h"
#include "relaxcol/families.h"
#include "relaxcol/graph.h"

namespace relaxcol {
namespace {

SolverConfig Config(Semantics s, int k, int bound) {
  SolverConfig cfg;
  cfg.semantics = s;
  cfg.k = k;
  cfg.bound = bound;
  return cfg;
}

constexpr Semantics kRelaxed = Semantics::kRelaxedStar;
constexpr Semantics kDefective = Semantics::kDefective;

TEST(Decide, TriangleIsNotFourColorableWithOneRelaxation) {
  EXPECT_FALSE(Decide(GenH(0).graph, Config(kRelaxed, 4, 1)).has_value());
}

TEST(Decide, G5SeparatesDefectiveFromRelaxed) {
  const Graph g5 = GenG5().graph;
  const auto f = Decide(g5, Config(kDefective, 4, 1));
  ASSERT_TRUE(f.has_value());
  EXPECT_TRUE(CheckDefective(g5, *f, 1).valid);
  EXPECT_FALSE(Decide(g5, Config(kRelaxed, 4, 1)).has_value());
  const auto h = Decide(g5, Config(kRelaxed, 4, 2));
  ASSERT_TRUE(h.has_value());
  EXPECT_TRUE(CheckRelaxed(g5, *h, 2).valid);
}

TEST(Decide, RejectsBadParameters) {
  const Graph g = MakeFamily(GraphFamily::kPath, 3);
  EXPECT_THROW(Decide(g, Config(kRelaxed, 0, 1)), InvalidParameterError);
  EXPECT_THROW(Decide(g, Config(kRelaxed, 65, 1)), InvalidParameterError);
  EXPECT_THROW(Decide(g, Config(kRelaxed, 4, -1)), InvalidParameterError);
  SolverConfig cfg = Config(kRelaxed, 4, 1);
  cfg.q = 0;
  EXPECT_THROW(Decide(g, cfg), InvalidParameterError);
}

TEST(Decide, NodeLimitRaises) {
  SolverConfig cfg = Config(kRelaxed, 7, 1);
  cfg.node_limit = 10;
  EXPECT_THROW(Decide(MakeFamily(GraphFamily::kComplete, 6), cfg),
               ResourceLimitError);
}

TEST(Decide, HonorsPins) {
  const Graph p3 = MakeFamily(GraphFamily::kPath, 3);
  const std::vector<Pin> pins = {{1, 3}};
  const auto f = Decide(p3, Config(kRelaxed, 4, 0), pins);
  ASSERT_TRUE(f.has_value());
  EXPECT_EQ(f->colors, (std::vector<int>{1, 3, 1}));
  const std::vector<Pin> clash = {{0, 2}, {1, 2}};
  EXPECT_FALSE(Decide(p3, Config(kRelaxed, 4, 3), clash).has_value());
}

TEST(Decide, LexicographicWitnessMatchesBruteForce) {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 300; ++i) {
    const int n = 1 + static_cast<int>(rng() % 6);
    const Graph g = GraphFromPairMask(n, rng() % (1ull << oracle::Pairs(n)));
    const Semantics s = rng() % 2 ? kRelaxed : kDefective;
    const int k = 1 + static_cast<int>(rng() % 6);
    const int bound = static_cast<int>(rng() % 3);
    std::optional<std::vector<int>> first;
    oracle::ForEachAssignment(n, k, [&](const std::vector<int>& c) {
      if (oracle::Accepts(g, c, k, 2, s, bound)) first = c;
      return !first;
    });
    const auto f = Decide(g, Config(s, k, bound));
    ASSERT_EQ(f.has_value(), first.has_value());
    if (f) EXPECT_EQ(f->colors, *first);
  }
}

TEST(Decide, AnyWitnessPassesVerifier) {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 300; ++i) {
    const int n = 1 + static_cast<int>(rng() % 9);
    const Graph g = GraphFromPairMask(n, rng() % (1ull << oracle::Pairs(n)));
    SolverConfig cfg = Config(rng() % 2 ? kRelaxed : kDefective,
                              1 + static_cast<int>(rng() % 8),
                              static_cast<int>(rng() % 3));
    cfg.witness = WitnessOrder::kAny;
    const auto f = Decide(g, cfg);
    if (f) {
      EXPECT_TRUE(CheckWithConfig(g, *f, cfg).valid);
    } else if (n <= 6) {
      EXPECT_FALSE(oracle::Colorable(g, cfg.k, 2, cfg.semantics, cfg.bound));
    }
  }
}

TEST(MinK, KnownValues) {
  EXPECT_EQ(MinK(MakeFamily(GraphFamily::kCycle, 3), kRelaxed, 1), 5);
  EXPECT_EQ(MinK(MakeFamily(GraphFamily::kComplete, 4), kRelaxed, 1), 6);
  // Pairwise distance two on a 4-clique needs all of 0, 2, 4, 6.
  EXPECT_EQ(MinK(MakeFamily(GraphFamily::kComplete, 4), kDefective, 0), 8);
  EXPECT_EQ(oracle::MinK(MakeFamily(GraphFamily::kComplete, 4), kDefective, 0),
            8);
}

TEST(MinK, OneColorWhenDegreeWithinDefect) {
  for (int d = 0; d <= 3; ++d) {
    for (std::uint64_t mask = 0; mask < 64; ++mask) {
      const Graph g = GraphFromPairMask(4, mask);
      EXPECT_EQ(MinK(g, kDefective, d) == 1, g.max_degree() <= d);
    }
  }
}

TEST(MinK, AgreesWithBruteForce) {
  for (int n = 1; n <= 5; ++n) {
    for (std::uint64_t mask = 0; mask < (1ull << oracle::Pairs(n)); ++mask) {
      const Graph g = GraphFromPairMask(n, mask);
      for (int bound = 0; bound <= 1; ++bound) {
        ASSERT_EQ(MinK(g, kRelaxed, bound), oracle::MinK(g, kRelaxed, bound))
            << "n=" << n << " mask=" << mask;
        ASSERT_EQ(MinK(g, kDefective, bound),
                  oracle::MinK(g, kDefective, bound))
            << "n=" << n << " mask=" << mask;
      }
      ASSERT_EQ(ChromaticNumber(g), oracle::Chromatic(g));
    }
  }
}

TEST(MinK, MonotoneInBound) {
  std::mt19937_64 rng(10);
  for (int i = 0; i < 100; ++i) {
    const int n = 2 + static_cast<int>(rng() % 7);
    const Graph g = GraphFromPairMask(n, rng() % (1ull << oracle::Pairs(n)));
    for (Semantics s : {kRelaxed, kDefective}) {
      int previous = MinK(g, s, 0);
      for (int bound = 1; bound <= 4; ++bound) {
        const int current = MinK(g, s, bound);
        EXPECT_LE(current, previous);
        previous = current;
      }
      // Decide is monotone in the bound at fixed k.
      for (int k = 1; k <= 6; ++k) {
        bool seen = false;
        for (int bound = 0; bound <= 4; ++bound) {
          const bool ok = IsColorable(g, Config(s, k, bound));
          EXPECT_TRUE(ok || !seen);
          seen = seen || ok;
        }
      }
    }
  }
}

// Two colors force every edge to relax, three colors likewise.
TEST(Decide, FewColorsCharacterization) {
  for (int n = 1; n <= 6; ++n) {
    for (std::uint64_t mask = 0; mask < (1ull << oracle::Pairs(n)); ++mask) {
      const Graph g = GraphFromPairMask(n, mask);
      const bool bipartite = oracle::Colorable(g, 2, 1, kRelaxed, 0);
      const bool three = oracle::Colorable(g, 3, 1, kRelaxed, 0);
      for (int t = 0; t <= 3; ++t) {
        const bool small_degree = g.max_degree() <= t;
        ASSERT_EQ(IsColorable(g, Config(kRelaxed, 2, t)),
                  bipartite && small_degree);
        ASSERT_EQ(IsColorable(g, Config(kRelaxed, 3, t)),
                  three && small_degree);
      }
    }
  }
}

TEST(MinK, RelaxedValueBetweenChromaticAndTwiceChromatic) {
  for (int n = 1; n <= 6; ++n) {
    for (std::uint64_t mask = 0; mask < (1ull << oracle::Pairs(n)); ++mask) {
      const Graph g = GraphFromPairMask(n, mask);
      const int chi = ChromaticNumber(g);
      ASSERT_EQ(MinK(g, kRelaxed, g.max_degree()), chi);
      for (int t = 0; t <= 2; ++t) {
        const int k = MinK(g, kRelaxed, t);
        ASSERT_LE(chi, k);
        ASSERT_LE(k, 2 * chi);
      }
    }
  }
}

TEST(Forall, CliqueColoringsRelaxEveryVertex) {
  const auto pred = RelaxationPredicate::EveryVertexRelaxedAtLeast(1);
  EXPECT_TRUE(ForallValidColorings(MakeFamily(GraphFamily::kComplete, 4),
                                   Config(kDefective, 5, 1), pred));
  EXPECT_TRUE(ForallValidColorings(MakeFamily(GraphFamily::kComplete, 6),
                                   Config(kDefective, 6, 1), pred));
  // K_3 fits in five colors without relaxing anyone.
  EXPECT_FALSE(ForallValidColorings(MakeFamily(GraphFamily::kComplete, 3),
                                    Config(kDefective, 5, 1), pred));
}

TEST(Forall, SingleVertexIsNeverRelaxed) {
  const auto pred = RelaxationPredicate::EveryVertexRelaxedAtLeast(1);
  const Graph k1 = MakeFamily(GraphFamily::kComplete, 1);
  EXPECT_FALSE(ForallValidColorings(k1, Config(kDefective, 3, 0), pred));
  EXPECT_FALSE(ForallValidColorings(k1, Config(kRelaxed, 4, 2), pred));
}

TEST(Forall, VacuousWhenNothingIsValid) {
  const auto pred = RelaxationPredicate::EveryVertexRelaxedAtLeast(5);
  EXPECT_TRUE(ForallValidColorings(GenH(0).graph, Config(kRelaxed, 4, 1),
                                   pred));
}

TEST(Forall, AgreesWithBruteForce) {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 200; ++i) {
    const int n = 1 + static_cast<int>(rng() % 5);
    const Graph g = GraphFromPairMask(n, rng() % (1ull << oracle::Pairs(n)));
    const Semantics s = rng() % 2 ? kRelaxed : kDefective;
    const int k = 2 + static_cast<int>(rng() % 5);
    const int bound = static_cast<int>(rng() % 3);
    const int x = static_cast<int>(rng() % 3);
    const auto pred = rng() % 2
                          ? RelaxationPredicate::EveryVertexRelaxedAtLeast(x)
                          : RelaxationPredicate::NoVertexRelaxedMoreThan(x);
    bool all = true;
    oracle::ForEachAssignment(n, k, [&](const std::vector<int>& c) {
      if (!oracle::Accepts(g, c, k, 2, s, bound)) return true;
      Coloring f;
      f.k = k;
      f.colors = c;
      all = pred.Holds(CheckWithConfig(g, f, Config(s, k, bound)).relaxations);
      return all;
    });
    EXPECT_EQ(ForallValidColorings(g, Config(s, k, bound), pred), all);
  }
}

// With both ends of u-x-y-v pinned to the same color, each end relaxes
// exactly once in every completion.
TEST(ForEachValidColoring, PinnedPathEndsRelaxOnce) {
  const Graph p4 = MakeFamily(GraphFamily::kPath, 4);
  for (int a = 0; a < 4; ++a) {
    const std::vector<Pin> pins = {{0, a}, {3, a}};
    const SolverConfig cfg = Config(kRelaxed, 4, 1);
    const std::uint64_t count =
        ForEachValidColoring(p4, cfg, [&](const Coloring& f) {
          const ColoringReport r = CheckRelaxed(p4, f, 1);
          EXPECT_EQ(r.relaxations[0], 1);
          EXPECT_EQ(r.relaxations[3], 1);
          return true;
        }, pins);
    EXPECT_GT(count, 0u);
  }
}

TEST(ForEachValidColoring, CountsMatchBruteForceInOrder) {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 100; ++i) {
    const int n = 1 + static_cast<int>(rng() % 5);
    const Graph g = GraphFromPairMask(n, rng() % (1ull << oracle::Pairs(n)));
    const Semantics s = rng() % 2 ? kRelaxed : kDefective;
    const int k = 1 + static_cast<int>(rng() % 5);
    const int bound = static_cast<int>(rng() % 3);
    std::vector<std::vector<int>> seen;
    ForEachValidColoring(g, Config(s, k, bound), [&](const Coloring& f) {
      seen.push_back(f.colors);
      return true;
    });
    std::vector<std::vector<int>> expected;
    oracle::ForEachAssignment(n, k, [&](const std::vector<int>& c) {
      if (oracle::Accepts(g, c, k, 2, s, bound)) expected.push_back(c);
      return true;
    });
    EXPECT_EQ(seen, expected);
  }
}

TEST(ForEachValidColoring, StopsWhenVisitorSaysSo) {
  const std::uint64_t visited = ForEachValidColoring(
      MakeFamily(GraphFamily::kPath, 4), Config(kRelaxed, 6, 1),
      [](const Coloring&) { return false; });
  EXPECT_EQ(visited, 1u);
}

}  // namespace
}  // namespace relaxcol
