#ifndef RELAXCOL_OUTER_EMBEDDING_H_
#define RELAXCOL_OUTER_EMBEDDING_H_

#include <optional>
#include <vector>

#include "relaxcol/graph.h"

namespace relaxcol {

// Cyclic order of all vertices along the outer face. Position 0 is the
// designated start.
struct OuterEmbedding {
  std::vector<Vertex> order;

  friend bool operator==(const OuterEmbedding&,
                         const OuterEmbedding&) = default;
};

// True iff no two vertex-disjoint edges strictly interleave in the cyclic
// order. Throws InvalidInputError if `emb` is not a permutation of the
// vertices of `g`.
bool ValidateOuterEmbedding(const Graph& g, const OuterEmbedding& emb);

// An outer-face order, or nullopt iff `g` is not outerplanar. Each connected
// component is handled separately: the outer cycle of every biconnected
// block is found by peeling degree-2 vertices, and the blocks are chained
// through their cut vertices starting from the component's smallest vertex.
// Components are concatenated by smallest vertex. Deterministic, but not
// necessarily the lexicographically smallest order.
std::optional<OuterEmbedding> FindOuterEmbedding(const Graph& g);

// Restriction of `emb` to `vertices` (relabelled through their position in
// `vertices`, as InducedSubgraph does).
OuterEmbedding RestrictEmbedding(const OuterEmbedding& emb,
                                 std::span<const Vertex> vertices, int n);

}  // namespace relaxcol

#endif  // RELAXCOL_OUTER_EMBEDDING_H_
