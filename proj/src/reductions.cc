#include "relaxcol/reductions.h"

#include <string>

#include "relaxcol/errors.h"
#include "relaxcol/solver.h"

namespace relaxcol {
namespace {

int Mod(int a, int k) { return ((a % k) + k) % k; }

ReductionInstance StartInstance(const Graph& g, ReductionKind kind,
                                int total_vertices) {
  ReductionInstance inst;
  inst.kind = kind;
  inst.original_vertex_count = g.num_vertices();
  inst.original_edges = g.edges();
  inst.constructed = Graph(total_vertices);
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    inst.original_vertex_map.push_back(v);
  }
  return inst;
}

void RequireKind(const ReductionInstance& inst, ReductionKind kind) {
  if (inst.kind != kind) {
    throw InvalidInputError("reduction instance has the wrong kind");
  }
}

// Shared by the P4 subdivision (no pairs) and gadget A.
ReductionInstance BuildPathGadgets(const Graph& g, int pairs_per_side,
                                   ReductionKind kind) {
  const int per_edge = 2 + 4 * pairs_per_side;
  ReductionInstance inst =
      StartInstance(g, kind, g.num_vertices() + per_edge * g.num_edges());
  Graph& out = inst.constructed;
  Vertex next = g.num_vertices();
  for (const Edge& e : g.edges()) {
    std::vector<Vertex> gadget;
    const Vertex x = next++;
    const Vertex y = next++;
    gadget = {x, y};
    out.AddEdge(e.first, x);
    out.AddEdge(x, y);
    out.AddEdge(y, e.second);
    for (Vertex hub : {x, y}) {
      for (int i = 0; i < pairs_per_side; ++i) {
        const Vertex a = next++;
        const Vertex b = next++;
        out.AddEdge(a, b);
        out.AddEdge(hub, a);
        out.AddEdge(hub, b);
        gadget.push_back(a);
        gadget.push_back(b);
      }
    }
    inst.edge_gadget_map.push_back(std::move(gadget));
  }
  return inst;
}

void RequireValid(const ColoringReport& report, const char* what) {
  if (!report.valid) throw InvalidInputError(what);
}

// Colors of the path-internal vertices and the K_2 pairs of gadget A for
// one edge, following the constructive direction of the reduction.
void ColorPathGadget(const std::vector<Vertex>& gadget, int a, int b,
                     int pairs_per_side, std::vector<int>& colors) {
  const auto [cx, cy] = P4InternalColors(a, b);
  colors[gadget[0]] = cx;
  colors[gadget[1]] = cy;
  int x_first, y_first;
  if (a == b) {
    x_first = Mod(a + 2, 4);
    y_first = a;
  } else {
    x_first = Mod(cx + 1, 4);
    y_first = Mod(cy + 1, 4);
  }
  std::size_t slot = 2;
  for (int i = 0; i < pairs_per_side; ++i) {
    colors[gadget[slot++]] = x_first;
    colors[gadget[slot++]] = Mod(x_first + 1, 4);
  }
  for (int i = 0; i < pairs_per_side; ++i) {
    colors[gadget[slot++]] = y_first;
    colors[gadget[slot++]] = Mod(y_first + 1, 4);
  }
}

Coloring LiftPathGadgets(const ReductionInstance& inst, const Coloring& f,
                         int pairs_per_side) {
  Coloring g{4, 2, std::vector<int>(inst.constructed.num_vertices(), 0)};
  for (Vertex v = 0; v < inst.original_vertex_count; ++v) {
    g.colors[v] = f.colors[v];
  }
  for (std::size_t e = 0; e < inst.original_edges.size(); ++e) {
    const Edge& edge = inst.original_edges[e];
    ColorPathGadget(inst.edge_gadget_map[e], f.colors[edge.first],
                    f.colors[edge.second], pairs_per_side, g.colors);
  }
  return g;
}

SolverConfig Config(Semantics semantics, int k, int q, int bound) {
  SolverConfig cfg;
  cfg.semantics = semantics;
  cfg.k = k;
  cfg.q = q;
  cfg.bound = bound;
  cfg.witness = WitnessOrder::kAny;
  return cfg;
}

}  // namespace

Graph ReductionInstance::Original() const {
  return Graph::FromEdges(original_vertex_count, original_edges);
}

ReductionInstance SubdivideP4(const Graph& g) {
  return BuildPathGadgets(g, 0, ReductionKind::kP4Subdivision);
}

ReductionInstance GadgetA(const Graph& g, int t) {
  if (t < 2) throw InvalidParameterError("gadget A needs t >= 2");
  ReductionInstance inst = BuildPathGadgets(g, t - 1, ReductionKind::kGadgetA);
  inst.params.t = t;
  return inst;
}

ReductionInstance BlowupCompose(const Graph& g, int p) {
  if (p < 1) throw InvalidParameterError("blow-up needs p >= 1");
  const int n = g.num_vertices();
  ReductionInstance inst = StartInstance(g, ReductionKind::kBlowup, n * p);
  inst.params.p = p;
  Vertex next = n;
  for (Vertex v = 0; v < n; ++v) {
    std::vector<Vertex> cls = {v};
    for (int j = 1; j < p; ++j) cls.push_back(next++);
    inst.vertex_classes.push_back(std::move(cls));
  }
  for (const Edge& e : g.edges()) {
    for (Vertex a : inst.vertex_classes[e.first]) {
      for (Vertex b : inst.vertex_classes[e.second]) {
        inst.constructed.AddEdge(a, b);
      }
    }
  }
  return inst;
}

ReductionInstance AttachCliques(const Graph& g, int k, int d) {
  if (k < 5) throw InvalidParameterError("clique attachment needs k >= 5");
  if (d < 1) throw InvalidParameterError("clique attachment needs d >= 1");
  const int n = g.num_vertices();
  const int size = (k / 2) * (d + 1);
  ReductionInstance inst = StartInstance(g, ReductionKind::kCliques, n * size);
  inst.params.k = k;
  inst.params.d = d;
  for (const Edge& e : g.edges()) inst.constructed.AddEdge(e.first, e.second);
  Vertex next = n;
  for (Vertex v = 0; v < n; ++v) {
    std::vector<Vertex> clique = {v};
    for (int j = 1; j < size; ++j) clique.push_back(next++);
    for (std::size_t a = 0; a < clique.size(); ++a) {
      for (std::size_t b = a + 1; b < clique.size(); ++b) {
        inst.constructed.AddEdge(clique[a], clique[b]);
      }
    }
    inst.vertex_classes.push_back(std::move(clique));
  }
  return inst;
}

std::pair<int, int> P4InternalColors(int a, int b) {
  if (a < 0 || a > 3 || b < 0 || b > 3) {
    throw InvalidInputError("P4 end colors must lie in [0, 4)");
  }
  switch (Mod(b - a, 4)) {
    case 0:
      return {Mod(a + 1, 4), Mod(a + 3, 4)};
    case 1:
      return {Mod(a + 2, 4), Mod(a + 3, 4)};
    case 2:
      return {Mod(a + 2, 4), a};
    default:
      // b = a + 3 is the b = a + 1 case read from the other end.
      return {Mod(b + 3, 4), Mod(b + 2, 4)};
  }
}

ColoringReport CheckSameColorDefective(const Graph& g, const Coloring& f,
                                       int d) {
  Coloring same = f;
  same.q = 1;
  return CheckDefective(g, same, d);
}

Coloring LiftSubdivision(const ReductionInstance& inst, const Coloring& f) {
  RequireKind(inst, ReductionKind::kP4Subdivision);
  if (f.k != 4) throw InvalidInputError("expected a 4-coloring");
  RequireValid(CheckSameColorDefective(inst.Original(), f, 1),
               "source coloring is not (4,1) same-color defective");
  return LiftPathGadgets(inst, f, 0);
}

Coloring LiftGadgetA(const ReductionInstance& inst, const Coloring& f) {
  RequireKind(inst, ReductionKind::kGadgetA);
  if (f.k != 4) throw InvalidInputError("expected a 4-coloring");
  RequireValid(CheckSameColorDefective(inst.Original(), f, inst.params.t),
               "source coloring is not (4,t) same-color defective");
  return LiftPathGadgets(inst, f, inst.params.t - 1);
}

Coloring ProjectToOriginals(const ReductionInstance& inst, const Coloring& g) {
  Coloring h{g.k, g.q, {}};
  for (Vertex v = 0; v < inst.original_vertex_count; ++v) {
    h.colors.push_back(g.colors[inst.original_vertex_map[v]]);
  }
  return h;
}

Coloring LiftBlowup(const ReductionInstance& inst, const Coloring& f) {
  RequireKind(inst, ReductionKind::kBlowup);
  Coloring g{f.k, f.q, std::vector<int>(inst.constructed.num_vertices(), 0)};
  for (Vertex v = 0; v < inst.original_vertex_count; ++v) {
    for (Vertex w : inst.vertex_classes[v]) g.colors[w] = f.colors[v];
  }
  return g;
}

Coloring ProjectBlowup(const ReductionInstance& inst, const Coloring& gstar,
                       int t) {
  RequireKind(inst, ReductionKind::kBlowup);
  Coloring h{gstar.k, gstar.q, {}};
  std::vector<int> count(gstar.k);
  for (const auto& cls : inst.vertex_classes) {
    std::fill(count.begin(), count.end(), 0);
    for (Vertex w : cls) ++count[gstar.colors[w]];
    int chosen = -1;
    for (int c = 0; c < gstar.k && chosen < 0; ++c) {
      if (count[c] >= t + 1) chosen = c;
    }
    if (chosen < 0) {
      throw InternalInvariantError("no color repeats t+1 times in a class");
    }
    h.colors.push_back(chosen);
  }
  return h;
}

Coloring LiftCliques(const ReductionInstance& inst, const Coloring& f) {
  RequireKind(inst, ReductionKind::kCliques);
  const int k = inst.params.k;
  const int d = inst.params.d;
  if (f.k != k) throw InvalidInputError("coloring modulus differs from k");
  RequireValid(CheckRelaxed(inst.Original(), f, 0),
               "source coloring is not a (k/2) coloring");
  Coloring g{k, 2, std::vector<int>(inst.constructed.num_vertices(), 0)};
  for (Vertex v = 0; v < inst.original_vertex_count; ++v) {
    const auto& clique = inst.vertex_classes[v];
    std::size_t slot = 0;
    for (int step = 0; step < k / 2; ++step) {
      const int c = Mod(f.colors[v] + 2 * step, k);
      for (int copy = 0; copy <= d; ++copy) g.colors[clique[slot++]] = c;
    }
  }
  return g;
}

Coloring Map42dTo2d(const Coloring& f) {
  if (f.k != 4) throw InvalidInputError("expected a 4-coloring");
  Coloring g{2, 1, {}};
  for (int c : f.colors) g.colors.push_back(c <= 1 ? 0 : 1);
  return g;
}

Coloring Map2dTo42d(const Coloring& g) {
  if (g.k != 2) throw InvalidInputError("expected a 2-coloring");
  Coloring h{4, 2, {}};
  for (int c : g.colors) h.colors.push_back(c == 0 ? 0 : 2);
  return h;
}

EquivalenceOutcome CheckP4Equivalence(const Graph& g) {
  const ReductionInstance inst = SubdivideP4(g);
  EquivalenceOutcome out;
  const auto source = Decide(g, Config(Semantics::kDefective, 4, 1, 1));
  const auto target =
      Decide(inst.constructed, Config(Semantics::kRelaxedStar, 4, 2, 1));
  out.source = source.has_value();
  out.target = target.has_value();
  if (source) {
    out.lift_verified =
        CheckRelaxed(inst.constructed, LiftSubdivision(inst, *source), 1).valid;
  }
  if (target) {
    out.projection_verified =
        CheckSameColorDefective(g, ProjectToOriginals(inst, *target), 1).valid;
  }
  return out;
}

EquivalenceOutcome CheckGadgetAEquivalence(const Graph& g, int t) {
  const ReductionInstance inst = GadgetA(g, t);
  EquivalenceOutcome out;
  const auto source = Decide(g, Config(Semantics::kDefective, 4, 1, t));
  const auto target =
      Decide(inst.constructed, Config(Semantics::kRelaxedStar, 4, 2, t));
  out.source = source.has_value();
  out.target = target.has_value();
  if (source) {
    out.lift_verified =
        CheckRelaxed(inst.constructed, LiftGadgetA(inst, *source), t).valid;
  }
  if (target) {
    out.projection_verified =
        CheckSameColorDefective(g, ProjectToOriginals(inst, *target), t).valid;
  }
  return out;
}

EquivalenceOutcome CheckBlowupEquivalence(const Graph& g, int k, int t) {
  const ReductionInstance inst = BlowupCompose(g, k * t + 1);
  EquivalenceOutcome out;
  const auto source = Decide(g, Config(Semantics::kRelaxedStar, k, 2, 0));
  const auto target =
      Decide(inst.constructed, Config(Semantics::kRelaxedStar, k, 2, t));
  out.source = source.has_value();
  out.target = target.has_value();
  if (source) {
    out.lift_verified =
        CheckRelaxed(inst.constructed, LiftBlowup(inst, *source), t).valid;
  }
  if (target) {
    out.projection_verified =
        CheckRelaxed(g, ProjectBlowup(inst, *target, t), 0).valid;
  }
  return out;
}

EquivalenceOutcome CheckCliquesEquivalence(const Graph& g, int k, int d) {
  const ReductionInstance inst = AttachCliques(g, k, d);
  EquivalenceOutcome out;
  const auto source = Decide(g, Config(Semantics::kRelaxedStar, k, 2, 0));
  const auto target =
      Decide(inst.constructed, Config(Semantics::kDefective, k, 2, d));
  out.source = source.has_value();
  out.target = target.has_value();
  if (source) {
    out.lift_verified =
        CheckDefective(inst.constructed, LiftCliques(inst, *source), d).valid;
  }
  if (target) {
    out.projection_verified =
        CheckRelaxed(g, ProjectToOriginals(inst, *target), 0).valid;
  }
  return out;
}

}  // namespace relaxcol
