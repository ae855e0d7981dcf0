#include "relaxcol/solver.h"

#include <algorithm>
#include <bit>
#include <string>
#include <vector>

#include "relaxcol/errors.h"

namespace relaxcol {
namespace {

using Mask = std::uint64_t;

Mask Bit(int c) { return Mask{1} << c; }

// Colors >= c.
Mask AtLeast(int c) { return ~(Bit(c) - 1); }

// Colors <= c.
Mask AtMost(int c) { return c >= 63 ? ~Mask{0} : Bit(c + 1) - 1; }

Mask FullMask(int k) { return k >= 64 ? ~Mask{0} : Bit(k) - 1; }

void ValidateConfig(const SolverConfig& cfg) {
  if (cfg.k < 1 || cfg.k > kMaxSolverColors) {
    throw InvalidParameterError("solver supports 1 <= k <= " +
                                std::to_string(kMaxSolverColors));
  }
  if (cfg.q < 1) throw InvalidParameterError("q must be positive");
  if (cfg.bound < 0) throw InvalidParameterError("bound must be nonnegative");
}

// Per-vertex pinned color, or -1.
std::vector<int> PinTable(const Graph& g, const SolverConfig& cfg,
                          std::span<const Pin> pins) {
  std::vector<int> pinned(g.num_vertices(), -1);
  for (const Pin& p : pins) {
    if (!g.HasVertex(p.vertex) || p.color < 0 || p.color >= cfg.k) {
      throw InvalidInputError("pin out of range");
    }
    if (pinned[p.vertex] != -1 && pinned[p.vertex] != p.color) {
      throw InvalidInputError("conflicting pins on vertex " +
                              std::to_string(p.vertex));
    }
    pinned[p.vertex] = p.color;
  }
  return pinned;
}

// Backtracking over partial colorings with forward checking. Each colored
// vertex carries the number of relaxations it already has, so candidate
// colors that would overrun any budget are filtered before branching.
class Engine {
 public:
  Engine(const Graph& g, const SolverConfig& cfg, std::uint64_t* nodes)
      : g_(g),
        n_(g.num_vertices()),
        bound_(cfg.bound),
        limit_(cfg.node_limit),
        nodes_(nodes),
        forbid_(cfg.k, 0),
        relax_(cfg.k, 0),
        base_(n_, FullMask(cfg.k)),
        color_(n_, -1),
        relax_count_(n_, 0),
        twin_prev_(n_, -1),
        twin_next_(n_, -1),
        scratch_(n_ + 1, std::vector<Mask>(n_, 0)) {
    for (int a = 0; a < cfg.k; ++a) {
      for (int b = 0; b < cfg.k; ++b) {
        const bool relaxes = CircularDistance(a, b, cfg.k) < cfg.q;
        if (cfg.semantics == Semantics::kRelaxedStar && a == b) {
          forbid_[a] |= Bit(b);
        } else if (relaxes) {
          relax_[a] |= Bit(b);
        }
      }
    }
  }

  void SetBase(Vertex v, Mask m) { base_[v] = m; }
  Mask base(Vertex v) const { return base_[v]; }

  // Interchangeable vertices (identical neighborhoods apart from each other)
  // are forced into nondecreasing color order. Swapping two such vertices is
  // an automorphism, so every solution set keeps a sorted representative,
  // including the lexicographically smallest one.
  void EnableTwinBreaking() {
    std::vector<int> cls(n_, -1);
    for (Vertex u = 0; u < n_; ++u) {
      if (cls[u] != -1) continue;
      cls[u] = u;
      Vertex last = u;
      for (Vertex v = u + 1; v < n_; ++v) {
        if (cls[v] == -1 && AreTwins(u, v)) {
          cls[v] = u;
          twin_prev_[v] = last;
          twin_next_[last] = v;
          last = v;
        }
      }
    }
  }

  // Dynamic most-constrained-first search. On success fills `out`.
  bool FindAny(std::vector<int>* out) {
    Reset();
    if (!SearchAny(0)) return false;
    *out = color_;
    return true;
  }

  // Visits complete colorings in lexicographic order (vertex 0 first).
  // Returns false if the visitor asked to stop.
  bool Enumerate(const std::function<bool(const std::vector<int>&)>& visit) {
    Reset();
    return SearchOrdered(0, visit);
  }

 private:
  bool AreTwins(Vertex u, Vertex v) const {
    auto nu = g_.neighbors(u);
    auto nv = g_.neighbors(v);
    std::size_t i = 0, j = 0;
    while (true) {
      while (i < nu.size() && nu[i] == v) ++i;
      while (j < nv.size() && nv[j] == u) ++j;
      if (i == nu.size() || j == nv.size()) {
        return i == nu.size() && j == nv.size();
      }
      if (nu[i] != nv[j]) return false;
      ++i;
      ++j;
    }
  }

  void Reset() {
    std::fill(color_.begin(), color_.end(), -1);
    std::fill(relax_count_.begin(), relax_count_.end(), 0);
  }

  void Tick() {
    ++*nodes_;
    if (limit_ && *nodes_ > *limit_) {
      throw ResourceLimitError("search node limit of " +
                               std::to_string(*limit_) + " exceeded");
    }
  }

  Mask Allowed(Vertex w) const {
    Mask m = base_[w];
    int colored = 0;
    for (Vertex u : g_.neighbors(w)) {
      const int cu = color_[u];
      if (cu < 0) continue;
      ++colored;
      m &= ~forbid_[cu];
      if (relax_count_[u] >= bound_) m &= ~relax_[cu];
    }
    if (colored > bound_ && m != 0) {
      for (Mask rest = m; rest != 0; rest &= rest - 1) {
        const int c = std::countr_zero(rest);
        int count = 0;
        for (Vertex u : g_.neighbors(w)) {
          if (color_[u] >= 0 && ((relax_[color_[u]] >> c) & 1u)) ++count;
        }
        if (count > bound_) m &= ~Bit(c);
      }
    }
    if (twin_prev_[w] >= 0 && color_[twin_prev_[w]] >= 0) {
      m &= AtLeast(color_[twin_prev_[w]]);
    }
    if (twin_next_[w] >= 0 && color_[twin_next_[w]] >= 0) {
      m &= AtMost(color_[twin_next_[w]]);
    }
    return m;
  }

  // Domains of all uncolored vertices; false on a wipe-out or when some
  // colored vertex is certain to exceed its budget.
  bool Propagate(std::vector<Mask>& masks) const {
    for (Vertex w = 0; w < n_; ++w) {
      if (color_[w] >= 0) continue;
      masks[w] = Allowed(w);
      if (masks[w] == 0) return false;
    }
    for (Vertex u = 0; u < n_; ++u) {
      const int cu = color_[u];
      if (cu < 0) continue;
      const int residual = bound_ - relax_count_[u];
      int forced = 0;
      for (Vertex w : g_.neighbors(u)) {
        if (color_[w] < 0 && (masks[w] & ~relax_[cu]) == 0) ++forced;
      }
      if (forced > residual) return false;
    }
    return true;
  }

  void Assign(Vertex v, int c) {
    color_[v] = c;
    for (Vertex u : g_.neighbors(v)) {
      if (color_[u] >= 0 && ((relax_[c] >> color_[u]) & 1u)) {
        ++relax_count_[u];
        ++relax_count_[v];
      }
    }
  }

  void Unassign(Vertex v) {
    const int c = color_[v];
    for (Vertex u : g_.neighbors(v)) {
      if (color_[u] >= 0 && ((relax_[c] >> color_[u]) & 1u)) {
        --relax_count_[u];
      }
    }
    relax_count_[v] = 0;
    color_[v] = -1;
  }

  bool SearchAny(int depth) {
    Tick();
    std::vector<Mask>& masks = scratch_[depth];
    if (!Propagate(masks)) return false;
    Vertex best = -1;
    int best_size = 65;
    int best_degree = -1;
    for (Vertex w = 0; w < n_; ++w) {
      if (color_[w] >= 0) continue;
      const int size = std::popcount(masks[w]);
      const int degree = g_.degree(w);
      if (size < best_size || (size == best_size && degree > best_degree)) {
        best = w;
        best_size = size;
        best_degree = degree;
      }
    }
    if (best < 0) return true;
    for (Mask rest = masks[best]; rest != 0; rest &= rest - 1) {
      Assign(best, std::countr_zero(rest));
      if (SearchAny(depth + 1)) return true;
      Unassign(best);
    }
    return false;
  }

  bool SearchOrdered(
      Vertex v, const std::function<bool(const std::vector<int>&)>& visit) {
    Tick();
    if (v == n_) return visit(color_);
    std::vector<Mask>& masks = scratch_[v];
    if (!Propagate(masks)) return true;
    for (Mask rest = masks[v]; rest != 0; rest &= rest - 1) {
      Assign(v, std::countr_zero(rest));
      const bool keep_going = SearchOrdered(v + 1, visit);
      Unassign(v);
      if (!keep_going) return false;
    }
    return true;
  }

  const Graph& g_;
  int n_;
  int bound_;
  std::optional<std::uint64_t> limit_;
  std::uint64_t* nodes_;
  std::vector<Mask> forbid_;
  std::vector<Mask> relax_;
  std::vector<Mask> base_;
  std::vector<int> color_;
  std::vector<int> relax_count_;
  std::vector<Vertex> twin_prev_;
  std::vector<Vertex> twin_next_;
  std::vector<std::vector<Mask>> scratch_;
};

}  // namespace

ColoringReport CheckWithConfig(const Graph& g, const Coloring& f,
                               const SolverConfig& cfg) {
  return cfg.semantics == Semantics::kRelaxedStar
             ? CheckRelaxed(g, f, cfg.bound)
             : CheckDefective(g, f, cfg.bound);
}

std::optional<Coloring> Decide(const Graph& g, const SolverConfig& cfg,
                               std::span<const Pin> pins) {
  ValidateConfig(cfg);
  const std::vector<int> pinned = PinTable(g, cfg, pins);
  Coloring result{cfg.k, cfg.q, std::vector<int>(g.num_vertices(), 0)};
  std::uint64_t nodes = 0;

  // Components share no constraints, so each is solved on its own and the
  // lexicographic minimum of the whole is the concatenation.
  for (const auto& comp : ConnectedComponents(g)) {
    Graph sub = InducedSubgraph(g, comp);
    Engine engine(sub, cfg, &nodes);
    bool has_pins = false;
    for (std::size_t i = 0; i < comp.size(); ++i) {
      if (pinned[comp[i]] >= 0) {
        engine.SetBase(static_cast<Vertex>(i), Bit(pinned[comp[i]]));
        has_pins = true;
      }
    }
    if (!has_pins) {
      // Rotating the colors of one component preserves validity, so its
      // smallest vertex may take color 0 (the lexicographic witness does).
      engine.EnableTwinBreaking();
      engine.SetBase(0, Bit(0));
    }
    std::vector<int> witness;
    if (!engine.FindAny(&witness)) return std::nullopt;

    if (cfg.witness == WitnessOrder::kLexicographic) {
      for (Vertex v = 0; v < sub.num_vertices(); ++v) {
        const Mask smaller = engine.base(v) & (Bit(witness[v]) - 1);
        for (Mask rest = smaller; rest != 0; rest &= rest - 1) {
          engine.SetBase(v, Bit(std::countr_zero(rest)));
          std::vector<int> better;
          if (engine.FindAny(&better)) {
            witness = std::move(better);
            break;
          }
        }
        engine.SetBase(v, Bit(witness[v]));
      }
    }
    for (std::size_t i = 0; i < comp.size(); ++i) {
      result.colors[comp[i]] = witness[i];
    }
  }
  return result;
}

bool IsColorable(const Graph& g, SolverConfig cfg, std::span<const Pin> pins) {
  cfg.witness = WitnessOrder::kAny;
  return Decide(g, cfg, pins).has_value();
}

int MinK(const Graph& g, Semantics semantics, int bound, int q,
         std::optional<std::uint64_t> node_limit) {
  const int n = g.num_vertices();
  const int start =
      (semantics == Semantics::kRelaxedStar && g.num_edges() > 0) ? 2 : 1;
  // k = q * n always admits a coloring with no relaxations at all.
  const int ceiling = std::max(1, q * n);
  for (int k = start; k <= ceiling; ++k) {
    SolverConfig cfg;
    cfg.semantics = semantics;
    cfg.k = k;
    cfg.q = q;
    cfg.bound = bound;
    cfg.node_limit = node_limit;
    if (IsColorable(g, cfg)) return k;
  }
  throw InternalInvariantError("no coloring found up to k = q * n");
}

int ChromaticNumber(const Graph& g) {
  return MinK(g, Semantics::kRelaxedStar, 0, 1);
}

bool RelaxationPredicate::Holds(std::span<const int> relaxations) const {
  for (int r : relaxations) {
    if (kind == Kind::kEveryVertexRelaxedAtLeast && r < threshold) return false;
    if (kind == Kind::kNoVertexRelaxedMoreThan && r > threshold) return false;
  }
  return true;
}

bool ForallValidColorings(const Graph& g, const SolverConfig& cfg,
                          RelaxationPredicate predicate,
                          std::span<const Pin> pins) {
  ValidateConfig(cfg);
  const std::vector<int> pinned = PinTable(g, cfg, pins);
  std::uint64_t nodes = 0;
  Engine engine(g, cfg, &nodes);
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (pinned[v] >= 0) engine.SetBase(v, Bit(pinned[v]));
  }
  // Both predicates only look at per-vertex relaxation counts, which a
  // rotation of one component's colors leaves untouched.
  for (const auto& comp : ConnectedComponents(g)) {
    const bool has_pins = std::any_of(comp.begin(), comp.end(),
                                      [&](Vertex v) { return pinned[v] >= 0; });
    if (!has_pins) engine.SetBase(comp.front(), Bit(0));
  }
  bool holds = true;
  Coloring f{cfg.k, cfg.q, {}};
  engine.Enumerate([&](const std::vector<int>& colors) {
    f.colors = colors;
    if (!predicate.Holds(AnalyzeColoring(g, f).relaxations)) holds = false;
    return holds;
  });
  return holds;
}

std::uint64_t ForEachValidColoring(
    const Graph& g, const SolverConfig& cfg,
    const std::function<bool(const Coloring&)>& visit,
    std::span<const Pin> pins) {
  ValidateConfig(cfg);
  const std::vector<int> pinned = PinTable(g, cfg, pins);
  std::uint64_t nodes = 0;
  Engine engine(g, cfg, &nodes);
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (pinned[v] >= 0) engine.SetBase(v, Bit(pinned[v]));
  }
  std::uint64_t visited = 0;
  Coloring f{cfg.k, cfg.q, {}};
  engine.Enumerate([&](const std::vector<int>& colors) {
    ++visited;
    f.colors = colors;
    return visit(f);
  });
  return visited;
}

}  // namespace relaxcol
