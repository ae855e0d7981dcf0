#ifndef RELAXCOL_OBFT_H_
#define RELAXCOL_OBFT_H_

#include <array>
#include <string>
#include <vector>

#include "relaxcol/graph.h"
#include "relaxcol/outer_embedding.h"

namespace relaxcol {

// Ordered breadth-first search partition of a connected outerplanar graph:
// a spanning tree rooted at `root` plus the remaining (non-tree) edges.
//
// "Left to right" is increasing outer-face index, where the index of a
// vertex is its distance along the embedding order starting from the root.
struct ObftPartition {
  Vertex root = 0;
  std::vector<Vertex> parent;        // -1 for the root
  std::vector<int> layer;            // depth, 0 for the root
  std::vector<int> position;         // 1-based left-to-right index in layer
  std::vector<int> outer_index;      // 0 for the root
  std::vector<std::vector<Vertex>> layers;
  std::vector<std::vector<Vertex>> sons;  // left to right
  std::vector<Edge> tree_edges;
  std::vector<Edge> nontree_edges;  // sorted

  int layer_count() const { return static_cast<int>(layers.size()); }
  int num_vertices() const { return static_cast<int>(parent.size()); }
  bool IsNontreeEdge(Vertex u, Vertex v) const;
  // The vertex at 1-based position `p` of layer `i`.
  Vertex At(int i, int p) const { return layers[i][p - 1]; }
};

// BFS from `root` that enqueues the unvisited neighbors of each dequeued
// vertex in increasing outer-face index. Throws InvalidInputError for a
// disconnected graph, an invalid embedding or a root out of range.
ObftPartition BuildObftPartition(const Graph& g, const OuterEmbedding& emb,
                                 Vertex root);

// Deepest common vertex of the tree paths from the root to u and v.
Vertex Lca(const ObftPartition& p, Vertex u, Vertex v);

// Vertices strictly inside the region bounded by the tree paths from
// Lca(u, v) to u and v together with uv, in the layered drawing of the
// tree: on every layer below the LCA, down to the shallower of u and v, the
// vertices strictly between the two paths.
// Requires uv to be a non-tree edge or u, v to be consecutive in one layer;
// throws InvalidInputError otherwise. Sorted ascending.
std::vector<Vertex> InteriorSet(const ObftPartition& p, Vertex u, Vertex v);

struct PropertyCheck {
  bool passed = true;
  std::vector<Edge> offending;
};

// The five structural properties of an OBFT partition:
//   [0] non-tree subgraph has maximum degree <= 4
//   [1] same-layer non-tree edges join consecutive positions
//   [2] cross-layer non-tree edges join consecutive layers
//   [3] a cross-layer edge v_p^i v_q^(i-1) has q = h + 1 for the father
//       v_h^(i-1), v_p^i is its rightmost son, and the interior is empty
//   [4] a same-layer edge between sons of v_l and v_h (l <= h) has h = l or
//       h = l + 1 and an empty interior
struct ObftPropertyReport {
  std::array<PropertyCheck, 5> properties;

  bool all_passed() const;
};

ObftPropertyReport VerifyObftProperties(const ObftPartition& p);

// Graphviz rendering: tree edges solid, non-tree edges dashed, one rank per
// layer. Nodes are labelled with 1-based ids unless `names` is non-empty.
std::string ObftToDot(const ObftPartition& p,
                      const std::vector<std::string>& names = {});

}  // namespace relaxcol

#endif  // RELAXCOL_OBFT_H_
