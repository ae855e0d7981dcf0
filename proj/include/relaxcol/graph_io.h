#ifndef RELAXCOL_GRAPH_IO_H_
#define RELAXCOL_GRAPH_IO_H_

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "relaxcol/coloring.h"
#include "relaxcol/graph.h"
#include "relaxcol/outer_embedding.h"
#include "relaxcol/reductions.h"

namespace relaxcol {

// Graph files are DIMACS-flavored, with 1-based vertex ids:
//
//   c <free text>             comment
//   c name <id> <name>        optional vertex name
//   p graph <n> <m>           header ("p edge" is accepted too)
//   e <u> <v>                 one line per edge
//   o <v1> ... <vn>           optional outer-face order
struct GraphDocument {
  Graph graph;
  std::optional<OuterEmbedding> embedding;
  // Empty, or one entry per vertex.
  std::vector<std::string> names;
  // Comment text (after "c "), excluding name lines.
  std::vector<std::string> comments;
};

enum class ParseErrorKind {
  kMissingHeader,
  kMalformedHeader,
  kMalformedLine,
  kUnknownLine,
  kDuplicateEdge,
  kSelfLoop,
  kIdOutOfRange,
  kBadEmbedding,
  kCountMismatch,
};

const char* ToString(ParseErrorKind kind);

// Positions are 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(ParseErrorKind kind, int line, int column,
             const std::string& message);

  ParseErrorKind kind() const { return kind_; }
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  ParseErrorKind kind_;
  int line_;
  int column_;
};

GraphDocument ParseGraph(std::string_view text);
std::string EmitGraph(const GraphDocument& doc);

// Coloring files:
//
//   k <k> q <q>
//   v <id> <color>            ids 1..n, each exactly once
//   s valid=<bool> max_relax=<int>   summary, ignored on input
Coloring ParseColoring(std::string_view text);
std::string EmitColoring(const Coloring& f, const ColoringReport& report);

// Graphviz rendering of a colored graph; node labels are colors.
std::string ColoringToDot(const Graph& g, const Coloring& f);

// Graph document for a constructed reduction instance, with the
// correspondence to the source graph recorded in comment lines.
GraphDocument ReductionDocument(const ReductionInstance& inst);

}  // namespace relaxcol

#endif  // RELAXCOL_GRAPH_IO_H_
