// relaxcol: command-line driver for the relaxed/defective coloring library.
//
// Exit status: 0 success, 1 negative answer (not colorable, invalid
// coloring, failed property), 2 bad input or parameters, 3 no answer
// (search aborted at the node limit, or an internal error).

#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "relaxcol/coloring.h"
#include "relaxcol/errors.h"
#include "relaxcol/families.h"
#include "relaxcol/graph.h"
#include "relaxcol/graph_io.h"
#include "relaxcol/obft.h"
#include "relaxcol/outer_embedding.h"
#include "relaxcol/outerplanar_color.h"
#include "relaxcol/reductions.h"
#include "relaxcol/solver.h"
#include "relaxcol/theorem_suite.h"

namespace {

using namespace relaxcol;

constexpr int kExitOk = 0;
constexpr int kExitNo = 1;
constexpr int kExitInput = 2;
constexpr int kExitLimit = 3;

std::string ReadInput(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  }
  std::ifstream in(path);
  if (!in) throw InvalidInputError("cannot open " + path);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

struct Options {
  std::string graph_path;
  std::string coloring_path;
  std::string semantics = "relaxed";
  std::optional<int> k;
  int q = 2;
  std::optional<int> t;
  std::optional<int> d;
  std::optional<int> root;
  std::uint64_t seed = 1;
  std::uint64_t node_limit = kDefaultNodeLimit;
  std::string format = "text";
  std::string method = "52";
  std::string kind;
  int n = 0;
  int m = 0;
  double p = 0.5;
  int criterion = 0;
};

Semantics ParseSemantics(const std::string& s) {
  if (s == "relaxed") return Semantics::kRelaxedStar;
  if (s == "defective") return Semantics::kDefective;
  throw InvalidParameterError("--semantics must be relaxed or defective");
}

// The relaxation bound: --t for relaxed, --d for defective.
int Bound(const Options& o, Semantics s) {
  const std::optional<int>& b = s == Semantics::kRelaxedStar ? o.t : o.d;
  const std::optional<int>& other = s == Semantics::kRelaxedStar ? o.d : o.t;
  if (other) {
    throw InvalidParameterError(s == Semantics::kRelaxedStar
                                    ? "--d needs --semantics defective"
                                    : "--t needs --semantics relaxed");
  }
  return b.value_or(1);
}

// 1-based vertex option -> internal id.
Vertex ExternalVertex(int id, const Graph& g) {
  if (id < 1 || id > g.num_vertices()) {
    throw InvalidParameterError("--root must be in 1.." +
                                std::to_string(g.num_vertices()));
  }
  return id - 1;
}

OuterEmbedding EmbeddingFor(const GraphDocument& doc) {
  if (doc.embedding) return *doc.embedding;
  std::optional<OuterEmbedding> found = FindOuterEmbedding(doc.graph);
  if (!found) throw InvalidInputError("graph is not outerplanar");
  return *found;
}

int Check(const Options& o) {
  const GraphDocument doc = ParseGraph(ReadInput(o.graph_path));
  Coloring f = ParseColoring(ReadInput(o.coloring_path));
  if (f.colors.size() != static_cast<std::size_t>(doc.graph.num_vertices())) {
    throw InvalidInputError("coloring has " + std::to_string(f.colors.size()) +
                            " vertices, graph has " +
                            std::to_string(doc.graph.num_vertices()));
  }
  const Semantics s = ParseSemantics(o.semantics);
  const int bound = Bound(o, s);
  const ColoringReport report = s == Semantics::kRelaxedStar
                                    ? CheckRelaxed(doc.graph, f, bound)
                                    : CheckDefective(doc.graph, f, bound);
  std::cout << EmitColoring(f, report);
  return report.valid ? kExitOk : kExitNo;
}

int Solve(const Options& o) {
  const GraphDocument doc = ParseGraph(ReadInput(o.graph_path));
  SolverConfig cfg;
  cfg.semantics = ParseSemantics(o.semantics);
  cfg.q = o.q;
  cfg.bound = Bound(o, cfg.semantics);
  cfg.node_limit = o.node_limit;
  if (o.k) {
    cfg.k = *o.k;
  } else {
    cfg.k = MinK(doc.graph, cfg.semantics, cfg.bound, cfg.q, o.node_limit);
    std::cout << "c min_k " << cfg.k << '\n';
  }
  const std::optional<Coloring> f = Decide(doc.graph, cfg);
  if (!f) {
    std::cout << "s not colorable k=" << cfg.k << " q=" << cfg.q << '\n';
    return kExitNo;
  }
  if (o.format == "dot") {
    std::cout << ColoringToDot(doc.graph, *f);
  } else {
    std::cout << EmitColoring(*f, CheckWithConfig(doc.graph, *f, cfg));
  }
  return kExitOk;
}

int Color(const Options& o) {
  const GraphDocument doc = ParseGraph(ReadInput(o.graph_path));
  const OuterEmbedding emb = EmbeddingFor(doc);
  std::optional<Vertex> root;
  if (o.root) root = ExternalVertex(*o.root, doc.graph);
  Coloring f;
  ColoringReport report;
  if (o.method == "52") {
    f = ColorOuterplanar52(doc.graph, emb, root);
    report = CheckRelaxed(doc.graph, f, 4);
  } else if (o.method == "42d") {
    f = ColorOuterplanar42Defective(doc.graph, emb, root);
    report = CheckDefective(doc.graph, f, 2);
  } else {
    throw InvalidParameterError("--method must be 52 or 42d");
  }
  if (o.format == "dot") {
    std::cout << ColoringToDot(doc.graph, f);
  } else {
    std::cout << EmitColoring(f, report);
  }
  return report.valid ? kExitOk : kExitNo;
}

int Obft(const Options& o) {
  const GraphDocument doc = ParseGraph(ReadInput(o.graph_path));
  const OuterEmbedding emb = EmbeddingFor(doc);
  const Vertex root = o.root ? ExternalVertex(*o.root, doc.graph)
                             : (emb.order.empty() ? 0 : emb.order.front());
  const ObftPartition p = BuildObftPartition(doc.graph, emb, root);
  const ObftPropertyReport report = VerifyObftProperties(p);
  if (o.format == "dot") {
    std::cout << ObftToDot(p, doc.names);
    return report.all_passed() ? kExitOk : kExitNo;
  }
  std::cout << "c root " << p.root + 1 << " layers " << p.layer_count()
            << '\n';
  for (int i = 0; i < p.layer_count(); ++i) {
    std::cout << "l " << i;
    for (Vertex v : p.layers[i]) std::cout << ' ' << v + 1;
    std::cout << '\n';
  }
  for (const Edge& e : p.tree_edges) {
    std::cout << "t " << e.first + 1 << ' ' << e.second + 1 << '\n';
  }
  for (const Edge& e : p.nontree_edges) {
    std::cout << "h " << e.first + 1 << ' ' << e.second + 1 << '\n';
  }
  for (int i = 0; i < 5; ++i) {
    const PropertyCheck& c = report.properties[i];
    std::cout << "s property " << i + 1 << ' '
              << (c.passed ? "pass" : "fail");
    for (const Edge& e : c.offending) {
      std::cout << ' ' << e.first + 1 << '-' << e.second + 1;
    }
    std::cout << '\n';
  }
  return report.all_passed() ? kExitOk : kExitNo;
}

int Gadget(const Options& o) {
  const GraphDocument doc = ParseGraph(ReadInput(o.graph_path));
  ReductionInstance inst;
  if (o.kind == "p4") {
    inst = SubdivideP4(doc.graph);
  } else if (o.kind == "gadget-a") {
    inst = GadgetA(doc.graph, o.t.value_or(2));
  } else if (o.kind == "blowup") {
    const int k = o.k.value_or(5);
    const int t = o.t.value_or(1);
    inst = BlowupCompose(doc.graph, k * t + 1);
  } else if (o.kind == "cliques") {
    inst = AttachCliques(doc.graph, o.k.value_or(5), o.d.value_or(1));
  } else {
    throw InvalidParameterError(
        "--kind must be p4, gadget-a, blowup or cliques");
  }
  std::cout << EmitGraph(ReductionDocument(inst));
  return kExitOk;
}

int Family(const Options& o) {
  GraphDocument doc;
  auto from_embedded = [&doc](EmbeddedGraph eg) {
    doc.graph = std::move(eg.graph);
    doc.embedding = std::move(eg.embedding);
    doc.names = std::move(eg.names);
  };
  if (o.kind == "path" || o.kind == "cycle" || o.kind == "complete") {
    const GraphFamily kind = o.kind == "path"    ? GraphFamily::kPath
                             : o.kind == "cycle" ? GraphFamily::kCycle
                                                 : GraphFamily::kComplete;
    doc.graph = MakeFamily(kind, o.n);
    doc.comments.push_back(o.kind + " n=" + std::to_string(o.n));
  } else if (o.kind == "g5") {
    from_embedded(GenG5());
    doc.comments.push_back("G5");
  } else if (o.kind == "h") {
    from_embedded(GenH(o.m));
    doc.comments.push_back("H m=" + std::to_string(o.m));
  } else if (o.kind == "random") {
    from_embedded(RandomOuterplanar(o.n, o.p, o.seed));
    std::ostringstream c;
    c << "random outerplanar n=" << o.n << " p=" << o.p
      << " seed=" << o.seed;
    doc.comments.push_back(c.str());
  } else {
    throw InvalidParameterError(
        "--kind must be path, cycle, complete, g5, h or random");
  }
  if (o.format == "dot") {
    std::cout << "graph g {\n";
    for (const Edge& e : doc.graph.edges()) {
      std::cout << "  " << e.first + 1 << " -- " << e.second + 1 << ";\n";
    }
    std::cout << "}\n";
  } else {
    std::cout << EmitGraph(doc);
  }
  return kExitOk;
}

int VerifyPaper(const Options& o) {
  bool all = true;
  auto print = [&all](const CriterionResult& r) {
    std::cout << FormatResult(r) << std::endl;
    all = all && r.passed;
  };
  if (o.criterion != 0) {
    print(RunCriterion(o.criterion));
  } else {
    for (int id = 1; id <= kCriterionCount; ++id) print(RunCriterion(id));
  }
  return all ? kExitOk : kExitNo;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Relaxed and defective 2-distant circular coloring tools"};
  app.require_subcommand(1);
  Options o;

  auto add_graph = [&o](CLI::App* sub) {
    sub->add_option("graph", o.graph_path, "graph file, or - for stdin")
        ->required();
  };
  auto add_bounds = [&o](CLI::App* sub) {
    sub->add_option("--semantics", o.semantics, "relaxed or defective")
        ->capture_default_str();
    sub->add_option("--t", o.t, "relaxation bound for relaxed semantics");
    sub->add_option("--d", o.d, "relaxation bound for defective semantics");
    sub->add_option("--q", o.q, "distance requirement")->capture_default_str();
  };
  auto add_format = [&o](CLI::App* sub) {
    sub->add_option("--format", o.format, "dot or text")
        ->check(CLI::IsMember({"dot", "text"}))
        ->capture_default_str();
  };

  CLI::App* check = app.add_subcommand("check", "verify a coloring");
  add_graph(check);
  check->add_option("coloring", o.coloring_path, "coloring file")->required();
  add_bounds(check);

  CLI::App* solve =
      app.add_subcommand("solve", "decide colorability, or find the least k");
  add_graph(solve);
  add_bounds(solve);
  solve->add_option("--k", o.k, "number of colors; omit to minimize");
  solve->add_option("--node-limit", o.node_limit, "search node budget")
      ->capture_default_str();
  add_format(solve);

  CLI::App* color =
      app.add_subcommand("color", "color an outerplanar graph");
  add_graph(color);
  color->add_option("--method", o.method,
                    "52 for (5/2,4)*, 42d for (4/2,2) defective")
      ->capture_default_str();
  color->add_option("--root", o.root, "BFS root (1-based)");
  add_format(color);

  CLI::App* obft =
      app.add_subcommand("obft", "outer BFS partition and its properties");
  add_graph(obft);
  obft->add_option("--root", o.root, "BFS root (1-based)");
  add_format(obft);

  CLI::App* gadget = app.add_subcommand("gadget", "build a reduction instance");
  add_graph(gadget);
  gadget->add_option("--kind", o.kind, "p4, gadget-a, blowup or cliques")
      ->required();
  gadget->add_option("--t", o.t, "relaxation bound (gadget-a, blowup)");
  gadget->add_option("--k", o.k, "number of colors (blowup, cliques)");
  gadget->add_option("--d", o.d, "defect bound (cliques)");

  CLI::App* family = app.add_subcommand("family", "emit a graph family member");
  family->add_option("--kind", o.kind,
                     "path, cycle, complete, g5, h or random")
      ->required();
  family->add_option("--n", o.n, "number of vertices");
  family->add_option("--m", o.m, "H(m) parameter");
  family->add_option("--p", o.p, "diagonal keep probability (random)")
      ->capture_default_str();
  family->add_option("--seed", o.seed, "random seed")->capture_default_str();
  add_format(family);

  CLI::App* verify =
      app.add_subcommand("verify-paper", "run the reproduction checks");
  verify->add_option("--criterion", o.criterion, "run only this check")
      ->check(CLI::Range(1, kCriterionCount));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*check) return Check(o);
    if (*solve) return Solve(o);
    if (*color) return Color(o);
    if (*obft) return Obft(o);
    if (*gadget) return Gadget(o);
    if (*family) return Family(o);
    if (*verify) return VerifyPaper(o);
  } catch (const ParseError& e) {
    std::cerr << "relaxcol: line " << e.line() << ", column " << e.column()
              << ": " << ToString(e.kind()) << ": " << e.what() << '\n';
    return kExitInput;
  } catch (const ResourceLimitError& e) {
    std::cerr << "relaxcol: " << e.what() << '\n';
    return kExitLimit;
  } catch (const std::invalid_argument& e) {
    std::cerr << "relaxcol: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::logic_error& e) {
    std::cerr << "relaxcol: internal error: " << e.what() << '\n';
    return kExitLimit;
  }
  return kExitInput;
}
