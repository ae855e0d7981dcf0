#include "relaxcol/theorem_suite.h"

#include <chrono>
#include <cstdint>
#include <functional>
#include <iomanip>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "relaxcol/coloring.h"
#include "relaxcol/errors.h"
#include "relaxcol/families.h"
#include "relaxcol/graph.h"
#include "relaxcol/obft.h"
#include "relaxcol/outerplanar_color.h"
#include "relaxcol/reductions.h"
#include "relaxcol/solver.h"

namespace relaxcol {
namespace {

// Collects mismatches; the first few are kept for the report.
class Failures {
 public:
  void Add(const std::string& what) {
    ++count_;
    if (count_ <= 3) {
      if (!text_.empty()) text_ += "; ";
      text_ += what;
    }
  }
  bool empty() const { return count_ == 0; }
  std::string Summary(const std::string& ok_text) const {
    if (count_ == 0) return ok_text;
    std::string s = std::to_string(count_) + " mismatch(es): " + text_;
    if (count_ > 3) s += "; ...";
    return s;
  }

 private:
  int count_ = 0;
  std::string text_;
};

SolverConfig Relaxed(int k, int t) {
  SolverConfig cfg;
  cfg.semantics = Semantics::kRelaxedStar;
  cfg.k = k;
  cfg.bound = t;
  cfg.witness = WitnessOrder::kAny;
  return cfg;
}

SolverConfig Defective(int k, int d) {
  SolverConfig cfg = Relaxed(k, d);
  cfg.semantics = Semantics::kDefective;
  return cfg;
}

std::string Name(GraphFamily kind, int n) {
  switch (kind) {
    case GraphFamily::kPath: return "P" + std::to_string(n);
    case GraphFamily::kCycle: return "C" + std::to_string(n);
    case GraphFamily::kComplete: return "K" + std::to_string(n);
    case GraphFamily::kEmpty: break;
  }
  return "E" + std::to_string(n);
}

// Compares MinK against `expected` and the closed form.
void CheckMinK(GraphFamily kind, int n, int t, int expected, Failures& f,
               bool compare_closed_form = true) {
  const int got = MinK(MakeFamily(kind, n), Semantics::kRelaxedStar, t);
  std::ostringstream where;
  where << Name(kind, n) << " t=" << t << ": ";
  if (got != expected) {
    f.Add(where.str() + "solver " + std::to_string(got) + ", expected " +
          std::to_string(expected));
  }
  if (compare_closed_form) {
    const int closed = ClosedFormCchi(kind, n, t);
    if (closed != got) {
      f.Add(where.str() + "closed form " + std::to_string(closed) +
            ", solver " + std::to_string(got));
    }
  }
}

void Paths(Failures& f) {
  for (int n = 3; n <= 10; ++n) {
    CheckMinK(GraphFamily::kPath, n, 1, 4, f);
    CheckMinK(GraphFamily::kPath, n, 2, 2, f);
    CheckMinK(GraphFamily::kPath, n, 3, 2, f);
  }
}

void Cycles(Failures& f) {
  for (int n = 3; n <= 9; ++n) {
    CheckMinK(GraphFamily::kCycle, n, 1, n == 3 ? 5 : 4, f);
    CheckMinK(GraphFamily::kCycle, n, 2, n % 2 == 0 ? 2 : 3, f);
  }
}

void CompleteGraphs(Failures& f) {
  for (int n = 2; n <= 6; ++n) {
    const int expected = n % 2 == 0 ? 3 * n / 2 : (3 * n + 1) / 2;
    // Compared with the formula as written; the closed-form function has
    // its own small-n rule and is checked in the witness criterion.
    CheckMinK(GraphFamily::kComplete, n, 1, expected, f, false);
    CheckMinK(GraphFamily::kComplete, n, 2, n, f, false);
  }
}

void Witnesses(Failures& f) {
  struct Case {
    GraphFamily kind;
    int lo, hi;
    std::vector<int> ts;
  };
  const std::vector<Case> cases = {
      {GraphFamily::kPath, 3, 10, {1, 2, 3}},
      {GraphFamily::kCycle, 3, 9, {1, 2}},
      {GraphFamily::kComplete, 2, 6, {1, 2}},
  };
  for (const Case& c : cases) {
    for (int n = c.lo; n <= c.hi; ++n) {
      const Graph g = MakeFamily(c.kind, n);
      for (int t : c.ts) {
        const int k = ClosedFormCchi(c.kind, n, t);
        const Coloring w = WitnessColoring(c.kind, n, t);
        const std::string where =
            Name(c.kind, n) + " t=" + std::to_string(t) + ": ";
        if (w.k != k || !CheckRelaxed(g, w, t).valid) {
          f.Add(where + "witness rejected at k=" + std::to_string(k));
        }
        if (k > 1 && IsColorable(g, Relaxed(k - 1, t))) {
          f.Add(where + "colorable at k=" + std::to_string(k - 1));
        }
      }
    }
  }
}

void G5(Failures& f) {
  const EmbeddedGraph g5 = GenG5();
  if (!IsColorable(g5.graph, Defective(4, 1))) {
    f.Add("no (4/2,1) defective coloring found");
  }
  if (IsColorable(g5.graph, Relaxed(4, 1))) {
    f.Add("(4/2,1)* coloring found");
  }
  if (!IsColorable(g5.graph, Relaxed(4, 2))) {
    f.Add("no (4/2,2)* coloring found");
  }
  if (!CheckDefective(g5.graph, G5DefectiveColoring(), 1).valid) {
    f.Add("stored defective coloring rejected");
  }
}

void HFamily(Failures& f) {
  if (IsColorable(GenH(0).graph, Relaxed(4, 1))) {
    f.Add("H(0) is (4/2,1)*-colorable");
  }
  for (int t = 2; t <= 3; ++t) {
    const int m = 2 * t - 2;
    const Graph h = GenH(m).graph;
    const std::string where = "H(" + std::to_string(m) + "): ";
    if (IsColorable(h, Relaxed(4, t))) {
      f.Add(where + "(4/2," + std::to_string(t) + ")* coloring found");
    }
    if (!CheckRelaxed(h, HWitness(t), t + 1).valid) {
      f.Add(where + "witness rejected at t=" + std::to_string(t + 1));
    }
  }
}

void ForcedRelaxation(Failures& f) {
  const auto pred = RelaxationPredicate::EveryVertexRelaxedAtLeast(1);
  if (!ForallValidColorings(MakeFamily(GraphFamily::kComplete, 4),
                            Defective(5, 1), pred)) {
    f.Add("K4, k=5, d=1: some vertex unrelaxed");
  }
  if (!ForallValidColorings(MakeFamily(GraphFamily::kComplete, 6),
                            Defective(6, 1), pred)) {
    f.Add("K6, k=6, d=1: some vertex unrelaxed");
  }
}

std::string MaskName(int n, std::uint64_t mask) {
  return "n=" + std::to_string(n) + " mask=" + std::to_string(mask);
}

void Equivalences(Failures& f, std::string& counts) {
  struct Suite {
    std::string name;
    int max_n;
    std::function<EquivalenceOutcome(const Graph&)> check;
  };
  const std::vector<Suite> suites = {
      {"p4", 5, [](const Graph& g) { return CheckP4Equivalence(g); }},
      {"gadget", 4,
       [](const Graph& g) { return CheckGadgetAEquivalence(g, 2); }},
      {"blowup", 3,
       [](const Graph& g) { return CheckBlowupEquivalence(g, 5, 1); }},
      {"cliques", 3,
       [](const Graph& g) { return CheckCliquesEquivalence(g, 5, 1); }},
  };
  std::mt19937_64 rng(20240611);
  std::bernoulli_distribution coin(0.5);
  std::ostringstream summary;
  const char* separator = "";
  for (const Suite& s : suites) {
    int exhaustive = 0;
    int positive = 0;
    for (int n = 1; n <= s.max_n; ++n) {
      const std::uint64_t masks = std::uint64_t{1} << (n * (n - 1) / 2);
      for (std::uint64_t mask = 0; mask < masks; ++mask) {
        const EquivalenceOutcome out = s.check(GraphFromPairMask(n, mask));
        ++exhaustive;
        positive += out.source;
        if (!out.ok()) f.Add(s.name + " " + MaskName(n, mask));
      }
    }
    const int n = s.max_n + 1;
    const int pairs = n * (n - 1) / 2;
    for (int i = 0; i < 200; ++i) {
      std::uint64_t mask = 0;
      for (int b = 0; b < pairs; ++b) {
        if (coin(rng)) mask |= std::uint64_t{1} << b;
      }
      const EquivalenceOutcome out = s.check(GraphFromPairMask(n, mask));
      positive += out.source;
      if (!out.ok()) f.Add(s.name + " random " + MaskName(n, mask));
    }
    summary << separator << s.name << ": " << exhaustive << "+200 graphs ("
            << positive << " colorable)";
    separator = "; ";
  }
  counts = summary.str();
}

void OuterplanarCorpus(Failures& f) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> size(3, 200);
  std::uniform_real_distribution<double> keep(0.0, 1.0);
  for (int i = 0; i < 1000; ++i) {
    const int n = size(rng);
    const double p = keep(rng);
    const std::uint64_t seed = rng();
    const EmbeddedGraph eg = RandomOuterplanar(n, p, seed);
    const std::string where = "instance " + std::to_string(i) + " (n=" +
                              std::to_string(n) + "): ";
    const ObftPartition part = BuildObftPartition(eg.graph, eg.embedding, 0);
    if (!VerifyObftProperties(part).all_passed()) {
      f.Add(where + "partition property failed");
    }
    const Coloring c52 = ColorOuterplanar52(eg.graph, eg.embedding, 0);
    if (!CheckRelaxed(eg.graph, c52, 4).valid) {
      f.Add(where + "(5/2,4)* coloring rejected");
    }
    for (const Edge& e : part.tree_edges) {
      if (CircularDistance(c52[e.first], c52[e.second], 5) != 2) {
        f.Add(where + "tree edge not at distance 2");
        break;
      }
    }
    for (const Edge& e : part.nontree_edges) {
      if (c52[e.first] == c52[e.second]) {
        f.Add(where + "non-tree edge monochromatic");
        break;
      }
    }
    if (!ConsecutiveSonsViolations(part, c52).empty()) {
      f.Add(where + "consecutive sons not at distance 1");
    }
    const Coloring c42 = ColorOuterplanar42Defective(eg.graph, eg.embedding, 0);
    if (!CheckDefective(eg.graph, c42, 2).valid) {
      f.Add(where + "(4/2,2) defective coloring rejected");
    }
  }
}

void SemanticsOrdering(Failures& f, std::string& counts) {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> size(1, 10);
  std::uniform_int_distribution<int> colors(2, 8);
  std::uniform_int_distribution<int> bound(0, 3);
  std::bernoulli_distribution coin(0.5);
  int relaxed_valid = 0;
  for (int i = 0; i < 500; ++i) {
    const int n = size(rng);
    const int k = colors(rng);
    const int t = bound(rng);
    Graph g(n);
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (coin(rng)) g.AddEdge(u, v);
      }
    }
    Coloring c;
    // Every other triple uses a solver coloring, so that the implication
    // is exercised on valid inputs and not only vacuously.
    std::optional<Coloring> solved;
    if (i % 2 == 1) solved = Decide(g, Relaxed(k, t));
    if (solved) {
      c = *solved;
    } else {
      c.k = k;
      c.colors.resize(n);
      std::uniform_int_distribution<int> pick(0, k - 1);
      for (int& x : c.colors) x = pick(rng);
    }
    const bool relaxed = CheckRelaxed(g, c, t).valid;
    relaxed_valid += relaxed;
    if (relaxed && !CheckDefective(g, c, t).valid) {
      f.Add("triple " + std::to_string(i));
    }
  }
  counts = std::to_string(relaxed_valid) + " of 500 relaxed-valid";
}

}  // namespace

CriterionResult RunCriterion(int id) {
  CriterionResult r;
  r.id = id;
  Failures failures;
  std::string extra;
  const auto start = std::chrono::steady_clock::now();
  try {
    switch (id) {
      case 1:
        r.title = "paths: min k for t=1,2,3";
        r.budget_seconds = 1;
        Paths(failures);
        break;
      case 2:
        r.title = "cycles: min k for t=1,2";
        r.budget_seconds = 1;
        Cycles(failures);
        break;
      case 3:
        r.title = "complete graphs: min k for t=1,2";
        r.budget_seconds = 30;
        CompleteGraphs(failures);
        break;
      case 4:
        r.title = "family witnesses valid and tight";
        r.budget_seconds = 60;
        Witnesses(failures);
        break;
      case 5:
        r.title = "G5: defective yes, relaxed t=1 no, t=2 yes";
        r.budget_seconds = 60;
        G5(failures);
        break;
      case 6:
        r.title = "H(m): relaxed lower bounds and witnesses";
        r.budget_seconds = 600;
        HFamily(failures);
        break;
      case 7:
        r.title = "K4/K6 defective colorings relax every vertex";
        r.budget_seconds = 60;
        ForcedRelaxation(failures);
        break;
      case 8:
        r.title = "reduction equivalences";
        r.budget_seconds = 600;
        Equivalences(failures, extra);
        break;
      case 9:
        r.title = "outerplanar colorers on 1000 random graphs";
        r.budget_seconds = 60;
        OuterplanarCorpus(failures);
        break;
      case 10:
        r.title = "relaxed-valid implies defective-valid";
        r.budget_seconds = 60;
        SemanticsOrdering(failures, extra);
        break;
      default:
        throw InvalidParameterError("criterion id must be in 1.." +
                                    std::to_string(kCriterionCount));
    }
  } catch (const InvalidParameterError&) {
    throw;
  } catch (const std::exception& e) {
    failures.Add(std::string("exception: ") + e.what());
  }
  r.seconds = std::chrono::duration<double>(
                  std::chrono::steady_clock::now() - start)
                  .count();
  r.detail = failures.Summary(extra.empty() ? "ok" : extra);
  r.passed = failures.empty() && r.seconds <= r.budget_seconds;
  if (failures.empty() && !r.passed) r.detail += "; over time budget";
  return r;
}

std::vector<CriterionResult> RunTheoremSuite() {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= kCriterionCount; ++id) out.push_back(RunCriterion(id));
  return out;
}

std::string FormatResult(const CriterionResult& r) {
  std::ostringstream out;
  out << (r.passed ? "PASS" : "FAIL") << "  " << std::setw(2) << r.id << "  "
      << std::left << std::setw(46) << r.title << std::right << " ("
      << std::fixed << std::setprecision(2) << r.seconds << " s / "
      << std::setprecision(0) << r.budget_seconds << " s)  " << r.detail;
  return out.str();
}

}  // namespace relaxcol
