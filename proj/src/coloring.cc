#include "relaxcol/coloring.h"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "relaxcol/errors.h"

namespace relaxcol {

int CircularDistance(int i, int j, int k) {
  if (k < 1 || i < 0 || j < 0 || i >= k || j >= k) {
    throw InvalidInputError("color out of range for modulus " +
                            std::to_string(k));
  }
  const int diff = std::abs(i - j);
  return std::min(diff, k - diff);
}

ColoringReport AnalyzeColoring(const Graph& g, const Coloring& f) {
  if (f.k < 1) throw InvalidInputError("coloring needs k >= 1");
  if (f.q < 1) throw InvalidInputError("coloring needs q >= 1");
  const int n = g.num_vertices();
  if (static_cast<int>(f.colors.size()) != n) {
    throw InvalidInputError("coloring does not cover every vertex");
  }
  ColoringReport report;
  report.relaxations.assign(n, 0);
  report.histogram.assign(f.k, 0);
  for (int c : f.colors) {
    if (c < 0 || c >= f.k) {
      throw InvalidInputError("color " + std::to_string(c) +
                              " outside [0, " + std::to_string(f.k) + ")");
    }
    ++report.histogram[c];
  }
  for (const Edge& e : g.edges()) {
    const int a = f.colors[e.first];
    const int b = f.colors[e.second];
    if (a == b) report.proper = false;
    if (CircularDistance(a, b, f.k) < f.q) {
      ++report.relaxations[e.first];
      ++report.relaxations[e.second];
    }
  }
  if (n > 0) {
    report.max_relaxations =
        *std::max_element(report.relaxations.begin(), report.relaxations.end());
  }
  return report;
}

ColoringReport CheckRelaxed(const Graph& g, const Coloring& f, int t) {
  ColoringReport report = AnalyzeColoring(g, f);
  report.valid = report.proper && report.max_relaxations <= t;
  return report;
}

ColoringReport CheckDefective(const Graph& g, const Coloring& f, int d) {
  ColoringReport report = AnalyzeColoring(g, f);
  report.valid = report.max_relaxations <= d;
  return report;
}

}  // namespace relaxcol
