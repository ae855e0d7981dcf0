#include "relaxcol/outerplanar_color.h"

#include <functional>

#include "relaxcol/errors.h"

namespace relaxcol {
namespace {

constexpr int kFive = 5;

// Runs `color_component` on every connected component with its own root
// and copies the local colors back.
Coloring ColorPerComponent(
    const Graph& g, const OuterEmbedding& emb, std::optional<Vertex> root,
    int k, const std::function<std::vector<int>(const ObftPartition&)>&
               color_component) {
  if (!ValidateOuterEmbedding(g, emb)) {
    throw InvalidInputError("embedding is not an outer-face order");
  }
  if (root && !g.HasVertex(*root)) throw InvalidInputError("root out of range");
  Coloring f{k, 2, std::vector<int>(g.num_vertices(), 0)};
  const int n = g.num_vertices();
  for (const auto& comp : ConnectedComponents(g)) {
    const Graph sub = InducedSubgraph(g, comp);
    const OuterEmbedding sub_emb = RestrictEmbedding(emb, comp, n);
    Vertex local_root = sub_emb.order.front();
    if (root) {
      for (std::size_t i = 0; i < comp.size(); ++i) {
        if (comp[i] == *root) local_root = static_cast<Vertex>(i);
      }
    }
    const ObftPartition p = BuildObftPartition(sub, sub_emb, local_root);
    const std::vector<int> local = color_component(p);
    for (std::size_t i = 0; i < comp.size(); ++i) f.colors[comp[i]] = local[i];
  }
  return f;
}

}  // namespace

Coloring ColorTree52(const ObftPartition& p) {
  Coloring f{kFive, 2, std::vector<int>(p.num_vertices(), 0)};
  f.colors[p.root] = 0;
  for (int i = 0; i < p.layer_count(); ++i) {
    const auto& layer = p.layers[i];
    for (std::size_t pos = 0; pos < layer.size(); ++pos) {
      const Vertex v = layer[pos];
      const auto& sons = p.sons[v];
      if (sons.empty()) continue;
      const int near = (f.colors[v] + 2) % kFive;
      const int far = (f.colors[v] + 3) % kFive;
      int start = near;
      if (pos > 0) {
        const Vertex left = layer[pos - 1];
        if (!p.sons[left].empty() && InteriorSet(p, left, v).empty()) {
          const int neighbor = f.colors[p.sons[left].back()];
          if (CircularDistance(near, neighbor, kFive) == 1) {
            start = near;
          } else if (CircularDistance(far, neighbor, kFive) == 1) {
            start = far;
          } else {
            throw InternalInvariantError(
                "no start color at distance 1 from the left neighbor's sons");
          }
        }
      }
      const int other = start == near ? far : near;
      for (std::size_t s = 0; s < sons.size(); ++s) {
        f.colors[sons[s]] = (s % 2 == 0) ? start : other;
      }
    }
  }
  return f;
}

Coloring ColorOuterplanar52(const Graph& g, const OuterEmbedding& emb,
                            std::optional<Vertex> root) {
  return ColorPerComponent(g, emb, root, kFive, [](const ObftPartition& p) {
    return ColorTree52(p).colors;
  });
}

Coloring ColorOuterplanar42Defective(const Graph& g,
                                     const OuterEmbedding& emb,
                                     std::optional<Vertex> root) {
  return ColorPerComponent(g, emb, root, 4, [](const ObftPartition& p) {
    std::vector<int> colors(p.num_vertices());
    for (Vertex v = 0; v < p.num_vertices(); ++v) {
      colors[v] = (p.layer[v] % 2 == 0) ? 0 : 2;
    }
    return colors;
  });
}

std::vector<std::pair<Vertex, Vertex>> ConsecutiveSonsViolations(
    const ObftPartition& p, const Coloring& f) {
  std::vector<std::pair<Vertex, Vertex>> bad;
  for (const auto& layer : p.layers) {
    for (std::size_t pos = 0; pos + 1 < layer.size(); ++pos) {
      const Vertex left = layer[pos];
      const Vertex right = layer[pos + 1];
      if (p.sons[left].empty() || p.sons[right].empty()) continue;
      if (!InteriorSet(p, left, right).empty()) continue;
      const int a = f.colors[p.sons[left].back()];
      const int b = f.colors[p.sons[right].front()];
      if (CircularDistance(a, b, f.k) != 1) bad.emplace_back(left, right);
    }
  }
  return bad;
}

}  // namespace relaxcol
