#include "relaxcol/graph_io.h"

#include <charconv>
#include <sstream>

namespace relaxcol {
namespace {

struct Token {
  std::string_view text;
  int column;  // 1-based
};

std::vector<Token> Tokenize(std::string_view line) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' ||
                               line[i] == '\r')) {
      ++i;
    }
    if (i >= line.size()) break;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' &&
           line[i] != '\r') {
      ++i;
    }
    tokens.push_back({line.substr(start, i - start),
                      static_cast<int>(start) + 1});
  }
  return tokens;
}

std::vector<std::string_view> SplitLines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) {
      if (start < text.size()) lines.push_back(text.substr(start));
      break;
    }
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  return lines;
}

std::optional<long long> ToInt(std::string_view s) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

// Remainder of the line after the first token ("c").
std::string CommentText(std::string_view line, const Token& first) {
  std::size_t pos = first.column - 1 + first.text.size();
  while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
  std::string_view rest = line.substr(pos);
  while (!rest.empty() && rest.back() == '\r') rest.remove_suffix(1);
  return std::string(rest);
}

}  // namespace

const char* ToString(ParseErrorKind kind) {
  switch (kind) {
    case ParseErrorKind::kMissingHeader: return "missing header";
    case ParseErrorKind::kMalformedHeader: return "malformed header";
    case ParseErrorKind::kMalformedLine: return "malformed line";
    case ParseErrorKind::kUnknownLine: return "unknown line type";
    case ParseErrorKind::kDuplicateEdge: return "duplicate edge";
    case ParseErrorKind::kSelfLoop: return "self-loop";
    case ParseErrorKind::kIdOutOfRange: return "id out of range";
    case ParseErrorKind::kBadEmbedding: return "bad embedding";
    case ParseErrorKind::kCountMismatch: return "count mismatch";
  }
  return "parse error";
}

ParseError::ParseError(ParseErrorKind kind, int line, int column,
                       const std::string& message)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) +
                         ": " + ToString(kind) + ": " + message),
      kind_(kind),
      line_(line),
      column_(column) {}

GraphDocument ParseGraph(std::string_view text) {
  GraphDocument doc;
  bool have_header = false;
  int header_line = 0;
  long long declared_edges = 0;
  int n = 0;
  struct NameLine {
    int id;
    std::string name;
    int line;
    int column;
  };
  std::vector<NameLine> named;
  int line_no = 0;
  int last_line = 0;
  int embedding_line = 0;

  auto vertex_id = [&](const Token& tok) -> Vertex {
    auto value = ToInt(tok.text);
    if (!value) {
      throw ParseError(ParseErrorKind::kMalformedLine, line_no, tok.column,
                       "expected a vertex id, got '" + std::string(tok.text) +
                           "'");
    }
    if (*value < 1 || *value > n) {
      throw ParseError(ParseErrorKind::kIdOutOfRange, line_no, tok.column,
                       "vertex id " + std::string(tok.text) + " not in 1.." +
                           std::to_string(n));
    }
    return static_cast<Vertex>(*value - 1);
  };
  auto require_header = [&](const Token& tok) {
    if (!have_header) {
      throw ParseError(ParseErrorKind::kMissingHeader, line_no, tok.column,
                       "'p graph <n> <m>' must come first");
    }
  };

  for (std::string_view line : SplitLines(text)) {
    ++line_no;
    last_line = line_no;
    const std::vector<Token> tokens = Tokenize(line);
    if (tokens.empty()) continue;
    const Token& head = tokens[0];
    if (head.text == "c") {
      if (tokens.size() >= 4 && tokens[1].text == "name") {
        auto id = ToInt(tokens[2].text);
        if (!id || *id < 1) {
          throw ParseError(ParseErrorKind::kMalformedLine, line_no,
                           tokens[2].column, "bad id in name line");
        }
        named.push_back({static_cast<int>(*id), std::string(tokens[3].text),
                         line_no, tokens[2].column});
        continue;
      }
      doc.comments.push_back(CommentText(line, head));
    } else if (head.text == "p") {
      if (have_header) {
        throw ParseError(ParseErrorKind::kMalformedHeader, line_no,
                         head.column, "second header line");
      }
      if (tokens.size() != 4 ||
          (tokens[1].text != "graph" && tokens[1].text != "edge")) {
        throw ParseError(ParseErrorKind::kMalformedHeader, line_no,
                         head.column, "expected 'p graph <n> <m>'");
      }
      auto nv = ToInt(tokens[2].text);
      auto ne = ToInt(tokens[3].text);
      if (!nv || *nv < 0) {
        throw ParseError(ParseErrorKind::kMalformedHeader, line_no,
                         tokens[2].column, "bad vertex count");
      }
      if (!ne || *ne < 0) {
        throw ParseError(ParseErrorKind::kMalformedHeader, line_no,
                         tokens[3].column, "bad edge count");
      }
      n = static_cast<int>(*nv);
      declared_edges = *ne;
      doc.graph = Graph(n);
      have_header = true;
      header_line = line_no;
    } else if (head.text == "e") {
      require_header(head);
      if (tokens.size() != 3) {
        throw ParseError(ParseErrorKind::kMalformedLine, line_no, head.column,
                         "expected 'e <u> <v>'");
      }
      const Vertex u = vertex_id(tokens[1]);
      const Vertex v = vertex_id(tokens[2]);
      if (u == v) {
        throw ParseError(ParseErrorKind::kSelfLoop, line_no, tokens[2].column,
                         "self-loop at vertex " + std::to_string(u + 1));
      }
      if (doc.graph.HasEdge(u, v)) {
        throw ParseError(ParseErrorKind::kDuplicateEdge, line_no,
                         tokens[1].column,
                         "edge " + std::to_string(u + 1) + " " +
                             std::to_string(v + 1) + " repeated");
      }
      doc.graph.AddEdge(u, v);
    } else if (head.text == "o") {
      require_header(head);
      if (doc.embedding) {
        throw ParseError(ParseErrorKind::kBadEmbedding, line_no, head.column,
                         "second order line");
      }
      if (static_cast<int>(tokens.size()) - 1 != n) {
        throw ParseError(ParseErrorKind::kBadEmbedding, line_no, head.column,
                         "order must list all " + std::to_string(n) +
                             " vertices");
      }
      OuterEmbedding emb;
      std::vector<char> seen(n, 0);
      for (std::size_t i = 1; i < tokens.size(); ++i) {
        const Vertex v = vertex_id(tokens[i]);
        if (seen[v]) {
          throw ParseError(ParseErrorKind::kBadEmbedding, line_no,
                           tokens[i].column,
                           "vertex " + std::to_string(v + 1) + " repeated");
        }
        seen[v] = 1;
        emb.order.push_back(v);
      }
      doc.embedding = std::move(emb);
      embedding_line = line_no;
    } else {
      throw ParseError(ParseErrorKind::kUnknownLine, line_no, head.column,
                       "unknown line type '" + std::string(head.text) + "'");
    }
  }
  if (!have_header) {
    throw ParseError(ParseErrorKind::kMissingHeader, last_line + 1, 1,
                     "no 'p graph' header");
  }
  if (doc.graph.num_edges() != declared_edges) {
    throw ParseError(ParseErrorKind::kCountMismatch, header_line, 1,
                     "header declares " + std::to_string(declared_edges) +
                         " edges, found " +
                         std::to_string(doc.graph.num_edges()));
  }
  if (doc.embedding && !ValidateOuterEmbedding(doc.graph, *doc.embedding)) {
    throw ParseError(ParseErrorKind::kBadEmbedding, embedding_line, 1,
                     "order is not an outer-face order (edges cross)");
  }
  if (!named.empty()) {
    doc.names.assign(n, "");
    for (const NameLine& entry : named) {
      if (entry.id > n) {
        throw ParseError(ParseErrorKind::kIdOutOfRange, entry.line,
                         entry.column,
                         "name for vertex " + std::to_string(entry.id));
      }
      doc.names[entry.id - 1] = entry.name;
    }
  }
  return doc;
}

std::string EmitGraph(const GraphDocument& doc) {
  std::ostringstream out;
  for (const std::string& c : doc.comments) {
    out << (c.empty() ? "c" : "c " + c) << '\n';
  }
  for (std::size_t i = 0; i < doc.names.size(); ++i) {
    if (!doc.names[i].empty()) {
      out << "c name " << i + 1 << ' ' << doc.names[i] << '\n';
    }
  }
  out << "p graph " << doc.graph.num_vertices() << ' '
      << doc.graph.num_edges() << '\n';
  for (const Edge& e : doc.graph.edges()) {
    out << "e " << e.first + 1 << ' ' << e.second + 1 << '\n';
  }
  if (doc.embedding) {
    out << 'o';
    for (Vertex v : doc.embedding->order) out << ' ' << v + 1;
    out << '\n';
  }
  return out.str();
}

Coloring ParseColoring(std::string_view text) {
  Coloring f;
  bool have_header = false;
  std::vector<std::pair<int, int>> entries;  // (id, color)
  std::vector<int> entry_lines;
  int line_no = 0;
  for (std::string_view line : SplitLines(text)) {
    ++line_no;
    const std::vector<Token> tokens = Tokenize(line);
    if (tokens.empty() || tokens[0].text == "c" || tokens[0].text == "s") {
      continue;
    }
    const Token& head = tokens[0];
    if (head.text == "k") {
      if (have_header || tokens.size() != 4 || tokens[2].text != "q") {
        throw ParseError(ParseErrorKind::kMalformedHeader, line_no,
                         head.column, "expected a single 'k <k> q <q>' line");
      }
      auto k = ToInt(tokens[1].text);
      auto q = ToInt(tokens[3].text);
      if (!k || *k < 1) {
        throw ParseError(ParseErrorKind::kMalformedHeader, line_no,
                         tokens[1].column, "bad k");
      }
      if (!q || *q < 1) {
        throw ParseError(ParseErrorKind::kMalformedHeader, line_no,
                         tokens[3].column, "bad q");
      }
      f.k = static_cast<int>(*k);
      f.q = static_cast<int>(*q);
      have_header = true;
    } else if (head.text == "v") {
      if (!have_header) {
        throw ParseError(ParseErrorKind::kMissingHeader, line_no, head.column,
                         "'k <k> q <q>' must come first");
      }
      if (tokens.size() != 3) {
        throw ParseError(ParseErrorKind::kMalformedLine, line_no, head.column,
                         "expected 'v <id> <color>'");
      }
      auto id = ToInt(tokens[1].text);
      auto color = ToInt(tokens[2].text);
      if (!id || *id < 1) {
        throw ParseError(ParseErrorKind::kIdOutOfRange, line_no,
                         tokens[1].column, "bad vertex id");
      }
      if (!color || *color < 0 || *color >= f.k) {
        throw ParseError(ParseErrorKind::kMalformedLine, line_no,
                         tokens[2].column,
                         "color must lie in [0, " + std::to_string(f.k) + ")");
      }
      entries.emplace_back(static_cast<int>(*id), static_cast<int>(*color));
      entry_lines.push_back(line_no);
    } else {
      throw ParseError(ParseErrorKind::kUnknownLine, line_no, head.column,
                       "unknown line type '" + std::string(head.text) + "'");
    }
  }
  if (!have_header) {
    throw ParseError(ParseErrorKind::kMissingHeader, line_no + 1, 1,
                     "no 'k <k> q <q>' line");
  }
  const int n = static_cast<int>(entries.size());
  f.colors.assign(n, -1);
  for (int i = 0; i < n; ++i) {
    const auto [id, color] = entries[i];
    if (id > n) {
      throw ParseError(ParseErrorKind::kIdOutOfRange, entry_lines[i], 3,
                       "vertex ids must be 1.." + std::to_string(n));
    }
    if (f.colors[id - 1] != -1) {
      throw ParseError(ParseErrorKind::kMalformedLine, entry_lines[i], 3,
                       "vertex " + std::to_string(id) + " colored twice");
    }
    f.colors[id - 1] = color;
  }
  return f;
}

std::string EmitColoring(const Coloring& f, const ColoringReport& report) {
  std::ostringstream out;
  out << "k " << f.k << " q " << f.q << '\n';
  for (std::size_t v = 0; v < f.colors.size(); ++v) {
    out << "v " << v + 1 << ' ' << f.colors[v] << '\n';
  }
  out << "s valid=" << (report.valid ? "true" : "false")
      << " max_relax=" << report.max_relaxations << '\n';
  return out.str();
}

std::string ColoringToDot(const Graph& g, const Coloring& f) {
  std::ostringstream out;
  out << "graph coloring {\n";
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    out << "  " << v + 1 << " [label=\"" << f.colors[v] << "\"];\n";
  }
  for (const Edge& e : g.edges()) {
    out << "  " << e.first + 1 << " -- " << e.second + 1 << ";\n";
  }
  out << "}\n";
  return out.str();
}

GraphDocument ReductionDocument(const ReductionInstance& inst) {
  GraphDocument doc;
  doc.graph = inst.constructed;
  const char* kind = "";
  switch (inst.kind) {
    case ReductionKind::kP4Subdivision: kind = "p4"; break;
    case ReductionKind::kGadgetA: kind = "gadget_A"; break;
    case ReductionKind::kBlowup: kind = "blowup"; break;
    case ReductionKind::kCliques: kind = "cliques"; break;
  }
  std::ostringstream params;
  params << "reduction " << kind << " t=" << inst.params.t
         << " k=" << inst.params.k << " d=" << inst.params.d
         << " p=" << inst.params.p;
  doc.comments.push_back(params.str());
  for (Vertex v = 0; v < inst.original_vertex_count; ++v) {
    doc.comments.push_back("map v " + std::to_string(v + 1) + " " +
                           std::to_string(inst.original_vertex_map[v] + 1));
  }
  for (std::size_t e = 0; e < inst.edge_gadget_map.size(); ++e) {
    std::string line = "gadget e " +
                       std::to_string(inst.original_edges[e].first + 1) + " " +
                       std::to_string(inst.original_edges[e].second + 1) + " :";
    for (Vertex w : inst.edge_gadget_map[e]) line += " " + std::to_string(w + 1);
    doc.comments.push_back(line);
  }
  for (std::size_t v = 0; v < inst.vertex_classes.size(); ++v) {
    std::string line = "class v " + std::to_string(v + 1) + " :";
    for (Vertex w : inst.vertex_classes[v]) line += " " + std::to_string(w + 1);
    doc.comments.push_back(line);
  }
  return doc;
}

}  // namespace relaxcol
