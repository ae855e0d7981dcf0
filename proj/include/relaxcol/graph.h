#ifndef RELAXCOL_GRAPH_H_
#define RELAXCOL_GRAPH_H_

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace relaxcol {

using Vertex = int;

// Unordered edge, always stored with first < second.
struct Edge {
  Vertex first = 0;
  Vertex second = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b)
      : first(a < b ? a : b), second(a < b ? b : a) {}

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Simple undirected graph on vertices 0..n-1.
//
// Edges are kept in insertion order (reductions rely on it for their id
// layout); neighbor lists are kept sorted.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int num_vertices);

  static Graph FromEdges(int num_vertices, std::span<const Edge> edges);

  // Throws InvalidInputError on self-loops, parallel edges and ids out of
  // range.
  void AddEdge(Vertex u, Vertex v);

  int num_vertices() const { return static_cast<int>(adjacency_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }

  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  int degree(Vertex v) const {
    return static_cast<int>(adjacency_[v].size());
  }
  int max_degree() const;
  bool HasEdge(Vertex u, Vertex v) const;
  bool HasVertex(Vertex v) const { return v >= 0 && v < num_vertices(); }

  const std::vector<Edge>& edges() const { return edges_; }

  // Edge sets compared as sets, ignoring insertion order.
  bool SameEdgeSet(const Graph& other) const;

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<Edge> edges_;
};

enum class GraphFamily { kPath, kCycle, kComplete, kEmpty };

// P_n is 0-1-...-(n-1); C_n closes (n-1)-0; K_n has every pair; kEmpty is
// the edgeless graph K_n^c.
Graph MakeFamily(GraphFamily kind, int n);

// Connected components, each sorted ascending, ordered by smallest vertex.
std::vector<std::vector<Vertex>> ConnectedComponents(const Graph& g);

bool IsConnected(const Graph& g);

// Subgraph induced by `vertices`; local id i corresponds to vertices[i].
Graph InducedSubgraph(const Graph& g, std::span<const Vertex> vertices);

// Every labeled graph on n vertices (2^(n choose 2) of them) in mask order;
// bit i of the mask selects the i-th pair in lexicographic pair order.
Graph GraphFromPairMask(int n, std::uint64_t mask);

}  // namespace relaxcol

#endif  // RELAXCOL_GRAPH_H_
