#include "relaxcol/families.h"

#include <cmath>
#include <random>
#include <utility>

#include "relaxcol/errors.h"

namespace relaxcol {
namespace {

void CheckFamilyParameters(GraphFamily kind, int n, int t) {
  if (t < 1) throw InvalidParameterError("t must be positive");
  switch (kind) {
    case GraphFamily::kPath:
    case GraphFamily::kCycle:
      if (n < 3) throw InvalidParameterError("paths and cycles need n >= 3");
      break;
    case GraphFamily::kComplete:
      if (n < 1) throw InvalidParameterError("complete graphs need n >= 1");
      break;
    case GraphFamily::kEmpty:
      throw InvalidParameterError("no closed form for the empty family");
  }
}

std::vector<int> Alternating(int n, int a, int b) {
  std::vector<int> colors(n);
  for (int i = 0; i < n; ++i) colors[i] = (i % 2 == 0) ? a : b;
  return colors;
}

}  // namespace

Vertex EmbeddedGraph::Id(std::string_view name) const {
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i] == name) return static_cast<Vertex>(i);
  }
  throw InvalidInputError("unknown vertex name: " + std::string(name));
}

int ClosedFormCchi(GraphFamily kind, int n, int t) {
  CheckFamilyParameters(kind, n, t);
  switch (kind) {
    case GraphFamily::kPath:
      return t == 1 ? 4 : 2;
    case GraphFamily::kCycle:
      if (t == 1) return n == 3 ? 5 : 4;
      return n % 2 == 0 ? 2 : 3;
    case GraphFamily::kComplete:
      if (n <= 2 || t >= 2) return n;
      return n % 2 == 0 ? 3 * n / 2 : (3 * n + 1) / 2;
    case GraphFamily::kEmpty:
      break;
  }
  throw InvalidParameterError("unsupported family");
}

Coloring WitnessColoring(GraphFamily kind, int n, int t) {
  const int k = ClosedFormCchi(kind, n, t);
  Coloring f{k, 2, {}};
  switch (kind) {
    case GraphFamily::kPath:
      f.colors = t == 1 ? Alternating(n, 0, 2) : Alternating(n, 0, 1);
      break;
    case GraphFamily::kCycle:
      if (t == 1) {
        if (n == 3) {
          f.colors = {0, 2, 4};
        } else if (n % 2 == 0) {
          f.colors = Alternating(n, 0, 2);
        } else {
          f.colors = Alternating(n - 3, 0, 2);
          f.colors.insert(f.colors.end(), {0, 1, 3});
        }
      } else {
        if (n % 2 == 0) {
          f.colors = Alternating(n, 0, 1);
        } else {
          f.colors = Alternating(n - 1, 0, 1);
          f.colors.push_back(2);
        }
      }
      break;
    case GraphFamily::kComplete:
      if (n <= 2 || t >= 2) {
        for (int i = 0; i < n; ++i) f.colors.push_back(i);
      } else {
        for (int i = 0; i < n / 2; ++i) {
          f.colors.push_back(3 * i);
          f.colors.push_back(3 * i + 1);
        }
        if (n % 2 == 1) f.colors.push_back(3 * (n / 2));
      }
      break;
    case GraphFamily::kEmpty:
      break;
  }
  return f;
}

EmbeddedGraph GenG5() {
  EmbeddedGraph out;
  out.names.push_back("x");
  for (int i = 1; i <= 5; ++i) {
    out.names.push_back("y" + std::to_string(i));
    out.names.push_back("u" + std::to_string(i));
    out.names.push_back("v" + std::to_string(i));
  }
  out.names.push_back("y6");
  const int n = static_cast<int>(out.names.size());
  out.graph = Graph(n);
  auto y = [](int i) { return 1 + 3 * (i - 1); };
  auto u = [](int i) { return 2 + 3 * (i - 1); };
  auto v = [](int i) { return 3 + 3 * (i - 1); };
  for (int i = 1; i <= 6; ++i) out.graph.AddEdge(0, y(i));
  for (int i = 1; i <= 5; ++i) {
    out.graph.AddEdge(y(i), u(i));
    out.graph.AddEdge(u(i), v(i));
    out.graph.AddEdge(v(i), y(i + 1));
  }
  for (Vertex w = 0; w < n; ++w) out.embedding.order.push_back(w);
  return out;
}

Coloring G5DefectiveColoring() {
  const EmbeddedGraph g5 = GenG5();
  Coloring f{4, 2, std::vector<int>(g5.graph.num_vertices(), 0)};
  for (std::size_t i = 0; i < g5.names.size(); ++i) {
    if (g5.names[i][0] == 'y') f.colors[i] = 2;
  }
  return f;
}

EmbeddedGraph GenH(int m) {
  if (m < 0) throw InvalidParameterError("H(m) needs m >= 0");
  EmbeddedGraph out;
  const char* hubs[] = {"x", "y", "z"};
  for (const char* hub : hubs) {
    out.names.push_back(hub);
    for (int i = 1; i <= m; ++i) out.names.push_back(hub + std::to_string(i));
  }
  out.graph = Graph(3 * (m + 1));
  auto hub = [m](int h) { return h * (m + 1); };
  auto spoke = [m](int h, int i) { return h * (m + 1) + i; };
  for (int h = 0; h < 3; ++h) {
    for (int i = 1; i < m; ++i) out.graph.AddEdge(spoke(h, i), spoke(h, i + 1));
  }
  if (m >= 1) {
    for (int h = 0; h < 3; ++h) out.graph.AddEdge(spoke(h, m), hub((h + 1) % 3));
  }
  out.graph.AddEdge(hub(0), hub(1));
  out.graph.AddEdge(hub(1), hub(2));
  out.graph.AddEdge(hub(2), hub(0));
  for (int h = 0; h < 3; ++h) {
    for (int i = 1; i <= m; ++i) out.graph.AddEdge(hub(h), spoke(h, i));
  }
  for (Vertex w = 0; w < out.graph.num_vertices(); ++w) {
    out.embedding.order.push_back(w);
  }
  return out;
}

Coloring HWitness(int t) {
  if (t < 2) throw InvalidParameterError("HWitness needs t >= 2");
  const int m = 2 * t - 2;
  Coloring f{4, 2, std::vector<int>(3 * (m + 1), 0)};
  auto hub = [m](int h) { return h * (m + 1); };
  auto spoke = [m](int h, int i) { return h * (m + 1) + i; };
  f.colors[hub(0)] = 0;
  f.colors[hub(1)] = 1;
  f.colors[hub(2)] = 2;
  for (int i = 1; i <= t - 1; ++i) {
    f.colors[spoke(0, 2 * i - 1)] = 2;
    f.colors[spoke(0, 2 * i)] = 3;
    f.colors[spoke(1, 2 * i - 1)] = 3;
    f.colors[spoke(1, 2 * i)] = 0;
    f.colors[spoke(2, 2 * i - 1)] = 0;
    f.colors[spoke(2, 2 * i)] = 1;
  }
  return f;
}

EmbeddedGraph RandomOuterplanar(int n, double edge_keep_prob,
                                std::uint64_t seed) {
  if (n < 3) throw InvalidParameterError("random outerplanar needs n >= 3");
  if (!(edge_keep_prob >= 0.0 && edge_keep_prob <= 1.0)) {
    throw InvalidParameterError("edge_keep_prob must lie in [0, 1]");
  }
  std::mt19937_64 rng(seed);
  // log Catalan(j) = number of triangulations of a (j + 2)-gon.
  std::vector<double> log_catalan(n, 0.0);
  for (int j = 1; j < n; ++j) {
    log_catalan[j] = std::lgamma(2.0 * j + 1) - std::lgamma(j + 2.0) -
                     std::lgamma(j + 1.0);
  }

  EmbeddedGraph out;
  out.graph = Graph(n);
  for (Vertex v = 0; v < n; ++v) {
    out.embedding.order.push_back(v);
    out.graph.AddEdge(v, (v + 1) % n);
  }
  // Every sub-polygon i..j (j - i >= 2) sits on side ij; its apex a splits
  // it with probability proportional to the triangulation counts of the
  // two remaining pieces.
  std::bernoulli_distribution keep(edge_keep_prob);
  std::vector<std::pair<int, int>> pending = {{0, n - 1}};
  std::vector<double> weights;
  while (!pending.empty()) {
    auto [i, j] = pending.back();
    pending.pop_back();
    if (j - i < 2) continue;
    weights.clear();
    const double total = log_catalan[j - i - 1];
    for (int a = i + 1; a < j; ++a) {
      weights.push_back(
          std::exp(log_catalan[a - i - 1] + log_catalan[j - a - 1] - total));
    }
    std::discrete_distribution<int> pick(weights.begin(), weights.end());
    const int a = i + 1 + pick(rng);
    for (auto [lo, hi] : {std::pair{i, a}, std::pair{a, j}}) {
      if (hi - lo >= 2) {
        if (keep(rng)) out.graph.AddEdge(lo, hi);
        pending.emplace_back(lo, hi);
      }
    }
  }
  return out;
}

}  // namespace relaxcol
