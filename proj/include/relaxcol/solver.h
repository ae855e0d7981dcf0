#ifndef RELAXCOL_SOLVER_H_
#define RELAXCOL_SOLVER_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <span>

#include "relaxcol/coloring.h"
#include "relaxcol/graph.h"

namespace relaxcol {

enum class Semantics {
  // Adjacent colors must differ; at most `bound` relaxations per vertex.
  kRelaxedStar,
  // Equal adjacent colors allowed; at most `bound` relaxations per vertex.
  kDefective,
};

enum class WitnessOrder {
  // The lexicographically smallest valid assignment (vertex 0 first).
  kLexicographic,
  // Whatever the search meets first; cheaper for pure yes/no questions.
  kAny,
};

inline constexpr std::uint64_t kDefaultNodeLimit = 100'000'000;
// Colors are tracked in 64-bit masks.
inline constexpr int kMaxSolverColors = 64;

struct SolverConfig {
  Semantics semantics = Semantics::kRelaxedStar;
  int k = 4;
  int q = 2;
  // t for kRelaxedStar, d for kDefective.
  int bound = 0;
  std::optional<std::uint64_t> node_limit = kDefaultNodeLimit;
  WitnessOrder witness = WitnessOrder::kLexicographic;
};

// Forces vertex `vertex` to take `color`.
struct Pin {
  Vertex vertex;
  int color;
};

// The verifier matching cfg.semantics.
ColoringReport CheckWithConfig(const Graph& g, const Coloring& f,
                               const SolverConfig& cfg);

// A coloring accepted by the verifier for `cfg`, or nullopt if none exists.
// Throws ResourceLimitError when the node limit is exceeded and
// InvalidParameterError for k outside [1, kMaxSolverColors], q < 1 or a
// negative bound.
std::optional<Coloring> Decide(const Graph& g, const SolverConfig& cfg,
                               std::span<const Pin> pins = {});

bool IsColorable(const Graph& g, SolverConfig cfg,
                 std::span<const Pin> pins = {});

// Smallest k for which the graph admits a coloring under `semantics` with
// the given bound.
int MinK(const Graph& g, Semantics semantics, int bound, int q = 2,
         std::optional<std::uint64_t> node_limit = kDefaultNodeLimit);

// Ordinary chromatic number, via kRelaxedStar with q = 1 and bound 0.
int ChromaticNumber(const Graph& g);

struct RelaxationPredicate {
  enum class Kind { kEveryVertexRelaxedAtLeast, kNoVertexRelaxedMoreThan };
  Kind kind;
  int threshold;

  static RelaxationPredicate EveryVertexRelaxedAtLeast(int x) {
    return {Kind::kEveryVertexRelaxedAtLeast, x};
  }
  static RelaxationPredicate NoVertexRelaxedMoreThan(int x) {
    return {Kind::kNoVertexRelaxedMoreThan, x};
  }
  bool Holds(std::span<const int> relaxations) const;
};

// True iff every coloring accepted under `cfg` (and consistent with `pins`)
// satisfies `predicate`; vacuously true when there is none.
bool ForallValidColorings(const Graph& g, const SolverConfig& cfg,
                          RelaxationPredicate predicate,
                          std::span<const Pin> pins = {});

// Calls `visit` on every valid coloring in lexicographic order, stopping
// early when it returns false. Returns the number of colorings visited.
std::uint64_t ForEachValidColoring(
    const Graph& g, const SolverConfig& cfg,
    const std::function<bool(const Coloring&)>& visit,
    std::span<const Pin> pins = {});

}  // namespace relaxcol

#endif  // RELAXCOL_SOLVER_H_
