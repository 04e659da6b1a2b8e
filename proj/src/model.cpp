#include "pdfl/model.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <utility>

#include "pdfl/errors.hpp"

namespace pdfl {

FilteredDigraph make_digraph(std::vector<double> vertex_values,
                             std::vector<Edge> edges,
                             const DigraphOptions& options) {
  std::vector<std::string> labels;
  labels.reserve(vertex_values.size());
  for (std::size_t i = 0; i < vertex_values.size(); ++i)
    labels.push_back(std::to_string(i));
  return make_digraph(std::move(vertex_values), std::move(labels),
                      std::move(edges), options);
}

FilteredDigraph make_digraph(std::vector<double> vertex_values,
                             std::vector<std::string> vertex_labels,
                             std::vector<Edge> edges,
                             const DigraphOptions& options) {
  if (vertex_values.empty())
    throw ValidationError("digraph needs at least one vertex");
  if (vertex_labels.size() != vertex_values.size())
    throw ValidationError("vertex label count does not match vertex count");
  const int n = static_cast<int>(vertex_values.size());

  for (int v = 0; v < n; ++v)
    if (!std::isfinite(vertex_values[v]))
      throw ValidationError("vertex " + std::to_string(v) +
                            " has a non-finite filtration value");

  std::set<std::pair<int, int>> seen;
  FilteredDigraph g;
  g.vertex_values = std::move(vertex_values);
  g.vertex_labels = std::move(vertex_labels);
  g.edges.reserve(edges.size());
  for (Edge e : edges) {
    if (e.src < 0 || e.src >= n || e.dst < 0 || e.dst >= n)
      throw ValidationError("edge (" + std::to_string(e.src) + "," +
                            std::to_string(e.dst) + ") references a missing vertex");
    if (e.src == e.dst)
      throw ValidationError("self-loop at vertex " + std::to_string(e.src));
    if (!seen.insert({e.src, e.dst}).second)
      throw ValidationError("duplicate edge (" + std::to_string(e.src) + "," +
                            std::to_string(e.dst) + ")");
    if (!std::isfinite(e.value))
      throw ValidationError("edge (" + std::to_string(e.src) + "," +
                            std::to_string(e.dst) + ") has a non-finite value");
    const double floor =
        std::max(g.vertex_values[e.src], g.vertex_values[e.dst]);
    if (e.value < floor) {
      if (options.strict)
        throw ValidationError(
            "edge (" + std::to_string(e.src) + "," + std::to_string(e.dst) +
            ") appears before one of its endpoints");
      e.value = floor;
      g.clamped = true;
    }
    g.edges.push_back(e);
  }
  return g;
}

FilteredDigraph sublevel(const FilteredDigraph& g, double a) {
  if (std::isnan(a)) throw ValidationError("sublevel parameter is NaN");
  FilteredDigraph out;
  std::vector<int> remap(g.vertex_values.size(), -1);
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.vertex_values[v] <= a) {
      remap[v] = out.vertex_count();
      out.vertex_values.push_back(g.vertex_values[v]);
      out.vertex_labels.push_back(g.vertex_labels[v]);
    }
  }
  for (const Edge& e : g.edges)
    if (e.value <= a)
      out.edges.push_back({remap[e.src], remap[e.dst], e.value});
  return out;
}

std::vector<double> filtration_grid(const FilteredDigraph& g) {
  std::vector<double> values = g.vertex_values;
  for (const Edge& e : g.edges) values.push_back(e.value);
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return values;
}

}  // namespace pdfl
