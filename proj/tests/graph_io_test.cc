#include "relaxcol/graph_io.h"

#include <gtest/gtest.h>

#include <random>
#include <string>

#include "relaxcol/families.h"
#include "relaxcol/reductions.h"

namespace relaxcol {
namespace {

ParseErrorKind KindOf(const std::string& text) {
  try {
    ParseGraph(text);
  } catch (const ParseError& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error for:\n" << text;
  return ParseErrorKind::kUnknownLine;
}

TEST(ParseGraph, SingleEdge) {
  const GraphDocument doc = ParseGraph("p graph 2 1\ne 1 2\n");
  EXPECT_EQ(doc.graph.num_vertices(), 2);
  EXPECT_TRUE(doc.graph.HasEdge(0, 1));
  EXPECT_FALSE(doc.embedding.has_value());
}

TEST(ParseGraph, OrderLineIsAttached) {
  const GraphDocument doc =
      ParseGraph("c triangle\np edge 3 3\ne 1 2\ne 2 3\ne 3 1\no 1 2 3\n");
  ASSERT_TRUE(doc.embedding.has_value());
  EXPECT_EQ(doc.embedding->order, (std::vector<Vertex>{0, 1, 2}));
  EXPECT_EQ(doc.comments, (std::vector<std::string>{"triangle"}));
}

TEST(ParseGraph, ToleratesBlankLinesAndCarriageReturns) {
  const GraphDocument doc = ParseGraph("\r\np graph 3 1\r\n\n  e 1 3  \r\n");
  EXPECT_TRUE(doc.graph.HasEdge(0, 2));
}

TEST(ParseGraph, NamesAreCollected) {
  const GraphDocument doc =
      ParseGraph("p graph 3 2\nc name 2 hub\ne 1 2\ne 2 3\n");
  EXPECT_EQ(doc.names, (std::vector<std::string>{"", "hub", ""}));
  EXPECT_TRUE(doc.comments.empty());
}

TEST(ParseGraph, DistinctErrors) {
  EXPECT_EQ(KindOf("p graph 2 1\ne 1 1\n"), ParseErrorKind::kSelfLoop);
  EXPECT_EQ(KindOf("p graph 2 2\ne 1 2\ne 2 1\n"),
            ParseErrorKind::kDuplicateEdge);
  EXPECT_EQ(KindOf("p graph 2 1\ne 1 3\n"), ParseErrorKind::kIdOutOfRange);
  EXPECT_EQ(KindOf("p graph 2 1\ne 0 1\n"), ParseErrorKind::kIdOutOfRange);
  EXPECT_EQ(KindOf("e 1 2\n"), ParseErrorKind::kMissingHeader);
  EXPECT_EQ(KindOf(""), ParseErrorKind::kMissingHeader);
  EXPECT_EQ(KindOf("p graph x 1\n"), ParseErrorKind::kMalformedHeader);
  EXPECT_EQ(KindOf("p graph 2\n"), ParseErrorKind::kMalformedHeader);
  EXPECT_EQ(KindOf("p graph 2 0\np graph 2 0\n"),
            ParseErrorKind::kMalformedHeader);
  EXPECT_EQ(KindOf("p graph 2 1\ne 1\n"), ParseErrorKind::kMalformedLine);
  EXPECT_EQ(KindOf("p graph 2 1\nx 1 2\n"), ParseErrorKind::kUnknownLine);
  EXPECT_EQ(KindOf("p graph 3 1\ne 1 2\no 1 2\n"),
            ParseErrorKind::kBadEmbedding);
  EXPECT_EQ(KindOf("p graph 3 1\ne 1 2\no 1 2 2\n"),
            ParseErrorKind::kBadEmbedding);
  EXPECT_EQ(KindOf("p graph 4 2\ne 1 3\ne 2 4\no 1 2 3 4\n"),
            ParseErrorKind::kBadEmbedding);
  EXPECT_EQ(KindOf("p graph 3 2\ne 1 2\n"), ParseErrorKind::kCountMismatch);
}

TEST(ParseGraph, ErrorsArePositional) {
  try {
    ParseGraph("c x\np graph 3 2\ne 1 2\ne 2   2\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.kind(), ParseErrorKind::kSelfLoop);
    EXPECT_EQ(e.line(), 4);
    EXPECT_EQ(e.column(), 7);
  }
  try {
    ParseGraph("p graph 2 1\n  e 1 9\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2);
    EXPECT_EQ(e.column(), 7);
  }
}

TEST(EmitGraph, RoundTrip) {
  const EmbeddedGraph g5 = GenG5();
  GraphDocument doc;
  doc.graph = g5.graph;
  doc.embedding = g5.embedding;
  doc.names = g5.names;
  doc.comments = {"G5", ""};
  const std::string text = EmitGraph(doc);
  const GraphDocument back = ParseGraph(text);
  EXPECT_EQ(back.graph.edges(), doc.graph.edges());
  EXPECT_EQ(back.embedding->order, doc.embedding->order);
  EXPECT_EQ(back.names, doc.names);
  EXPECT_EQ(back.comments, doc.comments);
  EXPECT_EQ(EmitGraph(back), text);
}

TEST(EmitGraph, RandomRoundTrips) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    GraphDocument doc;
    const EmbeddedGraph eg = RandomOuterplanar(3 + seed % 30, 0.5, seed);
    doc.graph = eg.graph;
    if (seed % 2) doc.embedding = eg.embedding;
    const GraphDocument back = ParseGraph(EmitGraph(doc));
    EXPECT_EQ(back.graph.edges(), doc.graph.edges());
    EXPECT_EQ(back.embedding.has_value(), doc.embedding.has_value());
  }
}

TEST(EmitColoring, Format) {
  const Graph k2 = MakeFamily(GraphFamily::kComplete, 2);
  const Coloring f{4, 2, {0, 2}};
  EXPECT_EQ(EmitColoring(f, CheckRelaxed(k2, f, 1)),
            "k 4 q 2\nv 1 0\nv 2 2\ns valid=true max_relax=0\n");
  const Coloring bad{4, 2, {1, 1}};
  EXPECT_EQ(EmitColoring(bad, CheckRelaxed(k2, bad, 1)),
            "k 4 q 2\nv 1 1\nv 2 1\ns valid=false max_relax=1\n");
}

TEST(ParseColoring, RoundTripAndErrors) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    const int n = 1 + static_cast<int>(rng() % 12);
    const int k = 1 + static_cast<int>(rng() % 9);
    Coloring f{k, 1 + static_cast<int>(rng() % 3), std::vector<int>(n)};
    for (int& c : f.colors) c = static_cast<int>(rng() % k);
    const Graph g = MakeFamily(GraphFamily::kPath, std::max(n, 1));
    const std::string text = EmitColoring(f, AnalyzeColoring(g, f));
    EXPECT_EQ(ParseColoring(text), f);
    EXPECT_EQ(EmitColoring(ParseColoring(text), AnalyzeColoring(g, f)), text);
  }
  // Vertex lines may come in any order.
  EXPECT_EQ(ParseColoring("k 3 q 2\nv 2 1\nv 1 0\n").colors,
            (std::vector<int>{0, 1}));
  EXPECT_THROW(ParseColoring("v 1 0\n"), ParseError);
  EXPECT_THROW(ParseColoring("k 3 q 2\nv 1 3\n"), ParseError);
  EXPECT_THROW(ParseColoring("k 3 q 2\nv 1 0\nv 1 1\n"), ParseError);
  EXPECT_THROW(ParseColoring("k 3 q 2\nv 3 0\n"), ParseError);
  EXPECT_THROW(ParseColoring("k 0 q 2\n"), ParseError);
}

TEST(ColoringToDot, LabelsAreColors) {
  const Graph p3 = MakeFamily(GraphFamily::kPath, 3);
  const std::string dot = ColoringToDot(p3, Coloring{5, 2, {0, 2, 4}});
  EXPECT_NE(dot.find("3 [label=\"4\"]"), std::string::npos);
  EXPECT_NE(dot.find("1 -- 2;"), std::string::npos);
}

TEST(ReductionDocument, RecordsCorrespondence) {
  const ReductionInstance inst =
      SubdivideP4(MakeFamily(GraphFamily::kComplete, 2));
  const GraphDocument doc = ReductionDocument(inst);
  const std::string text = EmitGraph(doc);
  EXPECT_NE(text.find("c reduction p4"), std::string::npos);
  EXPECT_NE(text.find("c gadget e 1 2 : 3 4"), std::string::npos);
  EXPECT_TRUE(ParseGraph(text).graph.SameEdgeSet(inst.constructed));
}

}  // namespace
}  // namespace relaxcol
