#ifndef RELAXCOL_COLORING_H_
#define RELAXCOL_COLORING_H_

#include <vector>

#include "relaxcol/graph.h"

namespace relaxcol {

// Total assignment of colors in [0, k) to the vertices of a graph. `q` is the
// circular distance an edge needs in order not to count as a relaxation.
struct Coloring {
  int k = 0;
  int q = 2;
  std::vector<int> colors;

  int operator[](Vertex v) const { return colors[v]; }

  friend bool operator==(const Coloring&, const Coloring&) = default;
};

// min(|i - j|, k - |i - j|). Throws InvalidInputError unless 0 <= i, j < k.
int CircularDistance(int i, int j, int k);

struct ColoringReport {
  // Per vertex: neighbors at circular distance < q.
  std::vector<int> relaxations;
  int max_relaxations = 0;
  // No edge joins two equal colors.
  bool proper = true;
  // Vertices per color, indexed by color.
  std::vector<int> histogram;
  bool valid = false;
};

// (k/q, t)*: proper, and every vertex has at most t relaxations.
ColoringReport CheckRelaxed(const Graph& g, const Coloring& f, int t);

// (k/q, d): at most d relaxations per vertex; equal colors on an edge count
// as a relaxation rather than a violation.
ColoringReport CheckDefective(const Graph& g, const Coloring& f, int d);

// Shared diagnostics; `valid` is left false. Throws InvalidInputError for
// partial colorings, colors out of range, k < 1 or q < 1.
ColoringReport AnalyzeColoring(const Graph& g, const Coloring& f);

}  // namespace relaxcol

#endif  // RELAXCOL_COLORING_H_
