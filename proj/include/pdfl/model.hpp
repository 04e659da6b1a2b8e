#pragma once

#include <string>
#include <vector>

namespace pdfl {

/// Directed edge src -> dst appearing at filtration value `value`.
struct Edge {
  int src = 0;
  int dst = 0;
  double value = 0.0;
};

/// A finite digraph (no self-loops; u->v and v->u may coexist) whose vertices
/// and edges carry real filtration values.  The sublevel graphs G_a form an
/// inclusion-monotone family: every edge value is >= both endpoint values.
struct FilteredDigraph {
  std::vector<double> vertex_values;
  std::vector<std::string> vertex_labels;  // same length as vertex_values
  std::vector<Edge> edges;
  bool clamped = false;  // an edge value was raised to meet its endpoints

  int vertex_count() const { return static_cast<int>(vertex_values.size()); }
  int edge_count() const { return static_cast<int>(edges.size()); }
};

struct DigraphOptions {
  /// With strict set, an edge value below max(endpoint values) is rejected
  /// instead of clamped up.
  bool strict = false;
};

/// Validates and canonicalizes the inputs into a FilteredDigraph.
/// Rejects: empty vertex set, non-finite values, out-of-range endpoints,
/// self-loops, duplicate directed edges.
FilteredDigraph make_digraph(std::vector<double> vertex_values,
                             std::vector<Edge> edges,
                             const DigraphOptions& options = {});

/// Same, with explicit vertex labels (labels.size() must match).
FilteredDigraph make_digraph(std::vector<double> vertex_values,
                             std::vector<std::string> vertex_labels,
                             std::vector<Edge> edges,
                             const DigraphOptions& options = {});

/// Sublevel graph G_a: vertices/edges with value <= a.  Vertices are
/// renumbered densely in ascending original order; labels follow.
FilteredDigraph sublevel(const FilteredDigraph& g, double a);

/// Sorted distinct filtration values occurring in g (vertices and edges).
std::vector<double> filtration_grid(const FilteredDigraph& g);

}  // namespace pdfl
