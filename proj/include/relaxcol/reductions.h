#ifndef RELAXCOL_REDUCTIONS_H_
#define RELAXCOL_REDUCTIONS_H_

#include <utility>
#include <vector>

#include "relaxcol/coloring.h"
#include "relaxcol/graph.h"

namespace relaxcol {

enum class ReductionKind { kP4Subdivision, kGadgetA, kBlowup, kCliques };

struct ReductionParams {
  int t = 0;
  int k = 0;
  int d = 0;
  int p = 0;
};

// A constructed instance together with its correspondence to the source
// graph. Original vertices keep their ids 0..n-1 in `constructed`; every
// added vertex gets a fresh id after them.
struct ReductionInstance {
  Graph constructed;
  ReductionKind kind = ReductionKind::kP4Subdivision;
  ReductionParams params;
  int original_vertex_count = 0;
  std::vector<Edge> original_edges;
  // original vertex -> constructed vertex (the identity on 0..n-1).
  std::vector<Vertex> original_vertex_map;
  // Per original edge (P4 and gadget A only): x, y, then the K_2 pairs
  // hanging off x, then those hanging off y.
  std::vector<std::vector<Vertex>> edge_gadget_map;
  // Per original vertex (blow-up and cliques only): its class V_i, or the
  // clique K_v, with the original vertex first.
  std::vector<std::vector<Vertex>> vertex_classes;

  Graph Original() const;
};

// Every edge uv becomes a path u-x-y-v.
ReductionInstance SubdivideP4(const Graph& g);

// Every edge uv becomes u-x-y-v where x and y are each joined to both ends
// of t-1 private copies of K_2. Requires t >= 2.
ReductionInstance GadgetA(const Graph& g, int t);

// Composition G[K_p^c]: each vertex becomes an independent class of p
// vertices; each edge becomes a complete p x p join. Requires p >= 1.
ReductionInstance BlowupCompose(const Graph& g, int p);

// Each vertex v is identified with one vertex of a private clique on
// floor(k/2) * (d+1) vertices. Requires k >= 5 and d >= 1.
ReductionInstance AttachCliques(const Graph& g, int k, int d);

// Colors (x, y) for the inner vertices of a path a-x-y-b in a 4-coloring
// so the path is (4/2, 1)*-valid. Unequal ends get no relaxation; equal
// ends get exactly one each.
std::pair<int, int> P4InternalColors(int a, int b);

// Same-color defective coloring: at most d neighbors share a vertex's color.
// Colorings for this notion carry q = 1.
ColoringReport CheckSameColorDefective(const Graph& g, const Coloring& f,
                                       int d);

// (4, 1) same-color defective coloring of the source -> (4/2, 1)* coloring
// of the subdivision. Throws InvalidInputError if `f` is not valid.
Coloring LiftSubdivision(const ReductionInstance& inst, const Coloring& f);

// (4, t) same-color defective coloring of the source -> (4/2, t)* coloring
// of the gadget instance. Throws InvalidInputError if `f` is not valid.
Coloring LiftGadgetA(const ReductionInstance& inst, const Coloring& f);

// Colors of the original vertices, unchanged.
Coloring ProjectToOriginals(const ReductionInstance& inst, const Coloring& g);

// Copies each vertex color onto its whole class.
Coloring LiftBlowup(const ReductionInstance& inst, const Coloring& f);

// Gives each original vertex the smallest color used at least t+1 times in
// its class. Throws InternalInvariantError if no color is that frequent.
Coloring ProjectBlowup(const ReductionInstance& inst, const Coloring& gstar,
                       int t);

// (k/2) coloring of the source -> (k/2, d) coloring of the clique instance:
// K_v takes f(v), f(v)+2, ... (up to f(v)+k-2 for even k, f(v)+k-3 for odd
// k), each d+1 times, and v keeps f(v). Throws InvalidInputError if `f` is
// not a (k/2) coloring of the source.
Coloring LiftCliques(const ReductionInstance& inst, const Coloring& f);

// {0,1} -> 0 and {2,3} -> 1 (the result is a same-color coloring, q = 1).
Coloring Map42dTo2d(const Coloring& f);

// 0 -> 0 and 1 -> 2, with k = 4 and q = 2.
Coloring Map2dTo42d(const Coloring& g);

// Colorability of source and constructed instance, decided independently
// by the exact solver, plus whether the constructive transfers verified.
struct EquivalenceOutcome {
  bool source = false;
  bool target = false;
  // Lifting a source witness produced a valid target coloring (vacuously
  // true when the source has none).
  bool lift_verified = true;
  // Projecting a target witness produced a valid source coloring
  // (vacuously true when the target has none).
  bool projection_verified = true;

  bool ok() const {
    return source == target && lift_verified && projection_verified;
  }
};

// (4, 1) same-color defective  vs  (4/2, 1)* of the P4 subdivision.
EquivalenceOutcome CheckP4Equivalence(const Graph& g);
// (4, t) same-color defective  vs  (4/2, t)* of the gadget instance.
EquivalenceOutcome CheckGadgetAEquivalence(const Graph& g, int t);
// (k/2) coloring  vs  (k/2, t)* of G[K_{kt+1}^c].
EquivalenceOutcome CheckBlowupEquivalence(const Graph& g, int k, int t);
// (k/2) coloring  vs  (k/2, d) of the clique attachment.
EquivalenceOutcome CheckCliquesEquivalence(const Graph& g, int k, int d);

}  // namespace relaxcol

#endif  // RELAXCOL_REDUCTIONS_H_
