#include "relaxcol/obft.h"

#include <algorithm>
#include <cstdlib>
#include <queue>
#include <sstream>

#include "relaxcol/errors.h"

namespace relaxcol {
namespace {

std::string Label(Vertex v, const std::vector<std::string>& names) {
  if (!names.empty()) return names[v];
  return std::to_string(v + 1);
}

// The ancestor of v in layer `depth` (at most layer(v)).
Vertex Ancestor(const ObftPartition& p, Vertex v, int depth) {
  while (p.layer[v] > depth) v = p.parent[v];
  return v;
}

}  // namespace

bool ObftPartition::IsNontreeEdge(Vertex u, Vertex v) const {
  return std::binary_search(nontree_edges.begin(), nontree_edges.end(),
                            Edge(u, v));
}

ObftPartition BuildObftPartition(const Graph& g, const OuterEmbedding& emb,
                                 Vertex root) {
  const int n = g.num_vertices();
  if (!g.HasVertex(root)) throw InvalidInputError("root out of range");
  if (!ValidateOuterEmbedding(g, emb)) {
    throw InvalidInputError("embedding is not an outer-face order");
  }
  if (!IsConnected(g)) {
    throw InvalidInputError("OBFT partition needs a connected graph");
  }

  ObftPartition p;
  p.root = root;
  p.parent.assign(n, -1);
  p.layer.assign(n, -1);
  p.position.assign(n, 0);
  p.outer_index.assign(n, 0);
  p.sons.assign(n, {});
  const auto start = std::find(emb.order.begin(), emb.order.end(), root);
  const int offset = static_cast<int>(start - emb.order.begin());
  for (int i = 0; i < n; ++i) {
    p.outer_index[emb.order[(offset + i) % n]] = i;
  }

  std::queue<Vertex> queue;
  queue.push(root);
  p.layer[root] = 0;
  p.layers.push_back({root});
  p.position[root] = 1;
  std::vector<Vertex> fresh;
  while (!queue.empty()) {
    const Vertex u = queue.front();
    queue.pop();
    fresh.clear();
    for (Vertex w : g.neighbors(u)) {
      if (p.layer[w] < 0) fresh.push_back(w);
    }
    std::sort(fresh.begin(), fresh.end(), [&](Vertex a, Vertex b) {
      return p.outer_index[a] < p.outer_index[b];
    });
    for (Vertex w : fresh) {
      const int depth = p.layer[u] + 1;
      p.layer[w] = depth;
      p.parent[w] = u;
      if (static_cast<int>(p.layers.size()) <= depth) p.layers.emplace_back();
      p.layers[depth].push_back(w);
      p.position[w] = static_cast<int>(p.layers[depth].size());
      p.sons[u].push_back(w);
      p.tree_edges.emplace_back(u, w);
      queue.push(w);
    }
  }
  for (const Edge& e : g.edges()) {
    if (p.parent[e.first] != e.second && p.parent[e.second] != e.first) {
      p.nontree_edges.push_back(e);
    }
  }
  std::sort(p.nontree_edges.begin(), p.nontree_edges.end());
  return p;
}

Vertex Lca(const ObftPartition& p, Vertex u, Vertex v) {
  while (p.layer[u] > p.layer[v]) u = p.parent[u];
  while (p.layer[v] > p.layer[u]) v = p.parent[v];
  while (u != v) {
    u = p.parent[u];
    v = p.parent[v];
  }
  return u;
}

std::vector<Vertex> InteriorSet(const ObftPartition& p, Vertex u, Vertex v) {
  const int n = p.num_vertices();
  if (u < 0 || v < 0 || u >= n || v >= n) {
    throw InvalidInputError("interior set: vertex out of range");
  }
  const bool consecutive = p.layer[u] == p.layer[v] &&
                           std::abs(p.position[u] - p.position[v]) == 1;
  if (!consecutive && !p.IsNontreeEdge(u, v)) {
    throw InvalidInputError(
        "interior set needs a non-tree edge or consecutive layer vertices");
  }
  // In the layered drawing of the tree, the region bounded by the two root
  // paths and uv spans the layers below the LCA down to the shallower of u
  // and v; on each of them it holds the vertices strictly between the two
  // paths.
  const Vertex top = Lca(p, u, v);
  const int bottom = std::min(p.layer[u], p.layer[v]);
  Vertex a = Ancestor(p, u, bottom);
  Vertex b = Ancestor(p, v, bottom);
  if (p.position[a] > p.position[b]) std::swap(a, b);
  std::vector<Vertex> inside;
  for (int j = bottom; j > p.layer[top]; --j) {
    for (int pos = p.position[a] + 1; pos < p.position[b]; ++pos) {
      inside.push_back(p.At(j, pos));
    }
    a = p.parent[a];
    b = p.parent[b];
  }
  std::sort(inside.begin(), inside.end());
  return inside;
}

bool ObftPropertyReport::all_passed() const {
  return std::all_of(properties.begin(), properties.end(),
                     [](const PropertyCheck& c) { return c.passed; });
}

ObftPropertyReport VerifyObftProperties(const ObftPartition& p) {
  ObftPropertyReport report;
  auto fail = [&](int which, const Edge& e) {
    report.properties[which].passed = false;
    report.properties[which].offending.push_back(e);
  };

  std::vector<int> h_degree(p.num_vertices(), 0);
  for (const Edge& e : p.nontree_edges) {
    ++h_degree[e.first];
    ++h_degree[e.second];
  }
  for (const Edge& e : p.nontree_edges) {
    if (h_degree[e.first] > 4 || h_degree[e.second] > 4) fail(0, e);
  }

  for (const Edge& e : p.nontree_edges) {
    Vertex a = e.first;
    Vertex b = e.second;
    if (p.layer[a] == p.layer[b]) {
      if (p.position[a] > p.position[b]) std::swap(a, b);
      if (p.position[b] != p.position[a] + 1) {
        fail(1, e);
        fail(4, e);
        continue;
      }
      const int l = p.position[p.parent[a]];
      const int h = p.position[p.parent[b]];
      if ((h != l && h != l + 1) || !InteriorSet(p, a, b).empty()) fail(4, e);
    } else {
      if (p.layer[a] < p.layer[b]) std::swap(a, b);  // a is deeper
      if (p.layer[a] != p.layer[b] + 1) {
        fail(2, e);
        fail(3, e);
        continue;
      }
      const Vertex father = p.parent[a];
      const bool next_to_father = p.position[b] == p.position[father] + 1;
      const bool rightmost = p.sons[father].back() == a;
      if (!next_to_father || !rightmost || !InteriorSet(p, a, b).empty()) {
        fail(3, e);
      }
    }
  }
  return report;
}

std::string ObftToDot(const ObftPartition& p,
                      const std::vector<std::string>& names) {
  std::ostringstream out;
  out << "graph obft {\n";
  for (const auto& layer : p.layers) {
    out << "  { rank=same;";
    for (Vertex v : layer) out << " \"" << Label(v, names) << "\";";
    out << " }\n";
  }
  for (const Edge& e : p.tree_edges) {
    out << "  \"" << Label(e.first, names) << "\" -- \""
        << Label(e.second, names) << "\";\n";
  }
  for (const Edge& e : p.nontree_edges) {
    out << "  \"" << Label(e.first, names) << "\" -- \""
        << Label(e.second, names) << "\" [style=dashed];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace relaxcol
