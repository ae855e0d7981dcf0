#ifndef RELAXCOL_OUTERPLANAR_COLOR_H_
#define RELAXCOL_OUTERPLANAR_COLOR_H_

#include <optional>
#include <utility>
#include <vector>

#include "relaxcol/coloring.h"
#include "relaxcol/graph.h"
#include "relaxcol/obft.h"
#include "relaxcol/outer_embedding.h"

namespace relaxcol {

// 5-coloring of the OBFT tree in which every tree edge has circular
// distance exactly 2. The root gets 0; the sons of each vertex v alternate
// between f(v)+2 and f(v)+3 (mod 5) from left to right. When the vertex
// immediately to the left of v in its layer has sons and the interior
// between the two is empty, the alternation starts with whichever of the
// two colors sits at distance 1 from that neighbor's rightmost son;
// otherwise it starts at f(v)+2.
//
// Throws InternalInvariantError if neither start color fits, which only
// happens for partitions that did not come from a valid outer embedding.
Coloring ColorTree52(const ObftPartition& p);

// (5/2, 4)* coloring: OBFT partition followed by ColorTree52, per connected
// component. `root` selects the root of the component containing it; other
// components (and all of them when `root` is empty) are rooted at their
// first vertex in embedding order.
Coloring ColorOuterplanar52(const Graph& g, const OuterEmbedding& emb,
                            std::optional<Vertex> root = std::nullopt);

// (4/2, 2) coloring: 0 on even OBFT layers, 2 on odd ones. Same component
// and root handling as ColorOuterplanar52.
Coloring ColorOuterplanar42Defective(
    const Graph& g, const OuterEmbedding& emb,
    std::optional<Vertex> root = std::nullopt);

// Consecutive sonful vertices (v_p, v_{p+1}) of a layer with an empty
// interior whose adjacent extreme sons are NOT at circular distance 1
// under `f`. Empty for every output of ColorTree52.
std::vector<std::pair<Vertex, Vertex>> ConsecutiveSonsViolations(
    const ObftPartition& p, const Coloring& f);

}  // namespace relaxcol

#endif  // RELAXCOL_OUTERPLANAR_COLOR_H_
