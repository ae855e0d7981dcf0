#include "relaxcol/outer_embedding.h"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "relaxcol/errors.h"

namespace relaxcol {
namespace {

std::vector<int> PositionsOrThrow(const Graph& g, const OuterEmbedding& emb) {
  const int n = g.num_vertices();
  if (static_cast<int>(emb.order.size()) != n) {
    throw InvalidInputError("embedding length differs from vertex count");
  }
  std::vector<int> pos(n, -1);
  for (int i = 0; i < n; ++i) {
    Vertex v = emb.order[i];
    if (v < 0 || v >= n || pos[v] != -1) {
      throw InvalidInputError("embedding is not a permutation of the vertices");
    }
    pos[v] = i;
  }
  return pos;
}

// Exactly one of c, d lies strictly between positions a and b.
bool Interleaves(int a, int b, int c, int d) {
  if (a > b) std::swap(a, b);
  const bool c_in = a < c && c < b;
  const bool d_in = a < d && d < b;
  return c_in != d_in;
}

// Biconnected components (as vertex lists) of a connected graph, each in
// discovery order, found by an iterative Tarjan search from vertex 0.
std::vector<std::vector<Vertex>> Blocks(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<std::size_t> next(n, 0);
  std::vector<Vertex> parent(n, -1);
  std::vector<Edge> edge_stack;
  std::vector<std::vector<Vertex>> blocks;
  std::vector<Vertex> stack = {0};
  int time = 0;
  disc[0] = low[0] = time++;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    const auto nbrs = g.neighbors(v);
    if (next[v] < nbrs.size()) {
      const Vertex w = nbrs[next[v]++];
      if (disc[w] == -1) {
        parent[w] = v;
        disc[w] = low[w] = time++;
        edge_stack.emplace_back(v, w);
        stack.push_back(w);
      } else if (w != parent[v] && disc[w] < disc[v]) {
        low[v] = std::min(low[v], disc[w]);
        edge_stack.emplace_back(v, w);
      }
      continue;
    }
    stack.pop_back();
    const Vertex u = parent[v];
    if (u < 0) continue;
    low[u] = std::min(low[u], low[v]);
    if (low[v] < disc[u]) continue;
    // u separates the subtree of v: pop its block.
    const Edge closing(u, v);
    std::vector<Vertex> block;
    std::vector<char> in_block(n, 0);
    while (true) {
      const Edge e = edge_stack.back();
      edge_stack.pop_back();
      for (Vertex x : {e.first, e.second}) {
        if (!in_block[x]) {
          in_block[x] = 1;
          block.push_back(x);
        }
      }
      if (e == closing) break;
    }
    blocks.push_back(std::move(block));
  }
  return blocks;
}

// Outer cycle of a biconnected block, by repeatedly removing a vertex of
// degree 2 and joining its two neighbors, then reinserting the removed
// vertices in reverse. Fails (nullopt) when no degree-2 vertex is left,
// or a reinsertion finds its neighbors apart; both mean the block is not
// outerplanar.
std::optional<std::vector<Vertex>> BlockCycle(const Graph& g,
                                              const std::vector<Vertex>& block) {
  const int b = static_cast<int>(block.size());
  if (b <= 3) return block;
  std::map<Vertex, int> local;
  for (int i = 0; i < b; ++i) local[block[i]] = i;
  std::vector<std::set<int>> adj(b);
  for (int i = 0; i < b; ++i) {
    for (Vertex w : g.neighbors(block[i])) {
      auto it = local.find(w);
      if (it != local.end()) adj[i].insert(it->second);
    }
  }
  struct Removal {
    int v, a, c;
  };
  std::vector<Removal> removed;
  std::vector<char> gone(b, 0);
  std::vector<int> queue;
  for (int i = 0; i < b; ++i) {
    if (adj[i].size() == 2) queue.push_back(i);
  }
  int alive = b;
  while (alive > 3) {
    if (queue.empty()) return std::nullopt;
    const int v = queue.back();
    queue.pop_back();
    if (gone[v] || adj[v].size() != 2) continue;
    const int a = *adj[v].begin();
    const int c = *adj[v].rbegin();
    gone[v] = 1;
    --alive;
    adj[a].erase(v);
    adj[c].erase(v);
    adj[a].insert(c);
    adj[c].insert(a);
    removed.push_back({v, a, c});
    for (int x : {a, c}) {
      if (adj[x].size() == 2) queue.push_back(x);
    }
  }
  // Remaining triangle as a circular linked list.
  std::vector<int> succ(b, -1), pred(b, -1);
  std::vector<int> rest;
  for (int i = 0; i < b; ++i) {
    if (!gone[i]) rest.push_back(i);
  }
  for (int i = 0; i < 3; ++i) {
    succ[rest[i]] = rest[(i + 1) % 3];
    pred[rest[(i + 1) % 3]] = rest[i];
  }
  for (auto it = removed.rbegin(); it != removed.rend(); ++it) {
    int a = it->a;
    int c = it->c;
    if (succ[c] == a) std::swap(a, c);
    if (succ[a] != c) return std::nullopt;
    succ[a] = it->v;
    pred[it->v] = a;
    succ[it->v] = c;
    pred[c] = it->v;
  }
  std::vector<Vertex> cycle;
  int x = 0;
  do {
    cycle.push_back(block[x]);
    x = succ[x];
  } while (x != 0);
  return cycle;
}

// Candidate order for a connected graph: each block's outer cycle, with the
// blocks hanging off a vertex inserted right after it. Valid whenever the
// graph is outerplanar; the caller validates.
std::optional<std::vector<Vertex>> ComponentOrder(const Graph& g) {
  const int n = g.num_vertices();
  if (n == 0) return std::vector<Vertex>{};
  if (n >= 3 && g.num_edges() > 2 * n - 3) return std::nullopt;
  std::vector<std::vector<Vertex>> cycles;
  std::vector<std::vector<int>> blocks_at(n);
  for (const auto& block : Blocks(g)) {
    auto cycle = BlockCycle(g, block);
    if (!cycle) return std::nullopt;
    for (Vertex v : *cycle) {
      blocks_at[v].push_back(static_cast<int>(cycles.size()));
    }
    cycles.push_back(std::move(*cycle));
  }
  std::vector<Vertex> order = {0};
  std::vector<char> used(cycles.size(), 0);
  const std::function<void(Vertex)> expand = [&](Vertex c) {
    for (int id : blocks_at[c]) {
      if (used[id]) continue;
      used[id] = 1;
      const auto& cyc = cycles[id];
      const std::size_t at = std::find(cyc.begin(), cyc.end(), c) - cyc.begin();
      for (std::size_t i = 1; i < cyc.size(); ++i) {
        const Vertex w = cyc[(at + i) % cyc.size()];
        order.push_back(w);
        expand(w);
      }
    }
  };
  expand(0);
  return order;
}

}  // namespace

bool ValidateOuterEmbedding(const Graph& g, const OuterEmbedding& emb) {
  const std::vector<int> pos = PositionsOrThrow(g, emb);
  const auto& edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      const Edge& e = edges[i];
      const Edge& f = edges[j];
      if (e.first == f.first || e.first == f.second ||
          e.second == f.first || e.second == f.second) {
        continue;
      }
      if (Interleaves(pos[e.first], pos[e.second], pos[f.first],
                      pos[f.second])) {
        return false;
      }
    }
  }
  return true;
}

std::optional<OuterEmbedding> FindOuterEmbedding(const Graph& g) {
  OuterEmbedding result;
  for (const auto& comp : ConnectedComponents(g)) {
    Graph sub = InducedSubgraph(g, comp);
    auto local = ComponentOrder(sub);
    if (!local || !ValidateOuterEmbedding(sub, OuterEmbedding{*local})) {
      return std::nullopt;
    }
    for (Vertex v : *local) result.order.push_back(comp[v]);
  }
  return result;
}

OuterEmbedding RestrictEmbedding(const OuterEmbedding& emb,
                                 std::span<const Vertex> vertices, int n) {
  std::vector<int> local(n, -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    local[vertices[i]] = static_cast<int>(i);
  }
  OuterEmbedding out;
  for (Vertex v : emb.order) {
    if (local[v] >= 0) out.order.push_back(local[v]);
  }
  return out;
}

}  // namespace relaxcol
