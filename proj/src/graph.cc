#include "relaxcol/graph.h"

#include <algorithm>
#include <queue>
#include <set>
#include <string>

#include "relaxcol/errors.h"

namespace relaxcol {

Graph::Graph(int num_vertices) {
  if (num_vertices < 0) {
    throw InvalidParameterError("negative vertex count");
  }
  adjacency_.resize(num_vertices);
}

Graph Graph::FromEdges(int num_vertices, std::span<const Edge> edges) {
  Graph g(num_vertices);
  for (const Edge& e : edges) g.AddEdge(e.first, e.second);
  return g;
}

void Graph::AddEdge(Vertex u, Vertex v) {
  if (!HasVertex(u) || !HasVertex(v)) {
    throw InvalidInputError("edge endpoint out of range: " +
                            std::to_string(u) + " " + std::to_string(v));
  }
  if (u == v) {
    throw InvalidInputError("self-loop at vertex " + std::to_string(u));
  }
  auto& nu = adjacency_[u];
  auto it = std::lower_bound(nu.begin(), nu.end(), v);
  if (it != nu.end() && *it == v) {
    throw InvalidInputError("parallel edge " + std::to_string(u) + " " +
                            std::to_string(v));
  }
  nu.insert(it, v);
  auto& nv = adjacency_[v];
  nv.insert(std::lower_bound(nv.begin(), nv.end(), u), u);
  edges_.emplace_back(u, v);
}

int Graph::max_degree() const {
  int best = 0;
  for (const auto& nbrs : adjacency_) {
    best = std::max(best, static_cast<int>(nbrs.size()));
  }
  return best;
}

bool Graph::HasEdge(Vertex u, Vertex v) const {
  if (!HasVertex(u) || !HasVertex(v)) return false;
  const auto& nu = adjacency_[u];
  return std::binary_search(nu.begin(), nu.end(), v);
}

bool Graph::SameEdgeSet(const Graph& other) const {
  if (num_vertices() != other.num_vertices()) return false;
  return adjacency_ == other.adjacency_;
}

Graph MakeFamily(GraphFamily kind, int n) {
  if (n < 1) throw InvalidParameterError("family size must be positive");
  Graph g(n);
  switch (kind) {
    case GraphFamily::kPath:
      for (Vertex v = 0; v + 1 < n; ++v) g.AddEdge(v, v + 1);
      break;
    case GraphFamily::kCycle:
      if (n < 3) throw InvalidParameterError("cycle needs n >= 3");
      for (Vertex v = 0; v + 1 < n; ++v) g.AddEdge(v, v + 1);
      g.AddEdge(n - 1, 0);
      break;
    case GraphFamily::kComplete:
      for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) g.AddEdge(u, v);
      }
      break;
    case GraphFamily::kEmpty:
      break;
  }
  return g;
}

std::vector<std::vector<Vertex>> ConnectedComponents(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<int> seen(n, 0);
  std::vector<std::vector<Vertex>> components;
  for (Vertex s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> comp;
    std::queue<Vertex> queue;
    queue.push(s);
    seen[s] = 1;
    while (!queue.empty()) {
      Vertex u = queue.front();
      queue.pop();
      comp.push_back(u);
      for (Vertex w : g.neighbors(u)) {
        if (!seen[w]) {
          seen[w] = 1;
          queue.push(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    components.push_back(std::move(comp));
  }
  return components;
}

bool IsConnected(const Graph& g) {
  return ConnectedComponents(g).size() <= 1;
}

Graph InducedSubgraph(const Graph& g, std::span<const Vertex> vertices) {
  std::vector<int> local(g.num_vertices(), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    local[vertices[i]] = static_cast<int>(i);
  }
  Graph sub(static_cast<int>(vertices.size()));
  for (const Edge& e : g.edges()) {
    if (local[e.first] >= 0 && local[e.second] >= 0) {
      sub.AddEdge(local[e.first], local[e.second]);
    }
  }
  return sub;
}

Graph GraphFromPairMask(int n, std::uint64_t mask) {
  Graph g(n);
  int bit = 0;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v, ++bit) {
      if ((mask >> bit) & 1u) g.AddEdge(u, v);
    }
  }
  return g;
}

}  // namespace relaxcol
