#ifndef RELAXCOL_FAMILIES_H_
#define RELAXCOL_FAMILIES_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "relaxcol/coloring.h"
#include "relaxcol/graph.h"
#include "relaxcol/outer_embedding.h"

namespace relaxcol {

// A graph with an outer-face order and, optionally, human-readable vertex
// names indexed by vertex id.
struct EmbeddedGraph {
  Graph graph;
  OuterEmbedding embedding;
  std::vector<std::string> names;

  // Throws InvalidInputError for unknown names.
  Vertex Id(std::string_view name) const;
};

// t-relaxed 2-distant circular chromatic number of P_n, C_n or K_n.
//
//   path:     4 if t = 1, else 2                       (n >= 3)
//   cycle:    t = 1: 5 if n = 3 else 4; t >= 2: 2 or 3 by parity of n
//   complete: t = 1: 3n/2 (n even), (3n+1)/2 (n odd); t >= 2: n
//
// K_1 and K_2 have maximum degree at most t, where the value collapses to
// the chromatic number (1 and 2).
int ClosedFormCchi(GraphFamily kind, int n, int t);

// A (k/2, t)* coloring with k = ClosedFormCchi(kind, n, t). Complete graphs
// with t = 1 use the color sets {0,1,3,4,...,3p-3,3p-2} (n = 2p) and the
// same set plus 3p (n = 2p + 1).
Coloring WitnessColoring(GraphFamily kind, int n, int t);

// Outerplanar graph on x, y1..y6, u1..u5, v1..v5 whose interior faces are
// 5-cycles. Ids follow the exterior cycle x y1 u1 v1 y2 ... v5 y6.
EmbeddedGraph GenG5();

// x, every u_i and v_i colored 0; every y_j colored 2; k = 4. A (4/2, 1)
// defective coloring of GenG5().
Coloring G5DefectiveColoring();

// H(m): triangle xyz with fans x-x_i, y-y_i, z-z_i, paths x_1..x_m,
// y_1..y_m, z_1..z_m and closing edges x_m y, y_m z, z_m x. Ids follow the
// exterior order x x_1..x_m y y_1..y_m z z_1..z_m.
EmbeddedGraph GenH(int m);

// (4/2, t+1)* coloring of H(2t-2) with f(x)=0, f(y)=1, f(z)=2 and, for
// i = 1..t-1, x_{2i-1}=2, x_{2i}=y_{2i-1}=3, y_{2i}=z_{2i-1}=0, z_{2i}=1.
// Requires t >= 2.
Coloring HWitness(int t);

// Triangulates the n-gon uniformly at random (over all triangulations),
// keeps every polygon side and each diagonal independently with
// probability `edge_keep_prob`. The embedding is the polygon order 0..n-1.
EmbeddedGraph RandomOuterplanar(int n, double edge_keep_prob,
                                std::uint64_t seed);

}  // namespace relaxcol

#endif  // RELAXCOL_FAMILIES_H_
