#include "pdfl/flag_complex.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "pdfl/errors.hpp"

namespace pdfl {

bool simplex_less(const Simplex& x, const Simplex& y) {
  if (x.value != y.value) return x.value < y.value;
  return x.vertices < y.vertices;
}

namespace {

struct AdjacencyIndex {
  int n = 0;
  std::vector<std::vector<int>> out;              // sorted out-neighbors
  std::unordered_map<long long, double> edge_value;

  long long key(int u, int v) const {
    return static_cast<long long>(u) * n + v;
  }
  double value(int u, int v) const { return edge_value.at(key(u, v)); }
};

// Grow the ordered clique `tuple` by every vertex in `cands` (the common
// out-neighborhood of all current members), recursing while room remains.
void extend(const AdjacencyIndex& adj, std::vector<int>& tuple, double value,
            const std::vector<int>& cands, int max_dim,
            FilteredFlagComplex& cx) {
  const int dim = static_cast<int>(tuple.size()) - 1;
  cx.simplices[dim].push_back({tuple, value});
  if (dim == max_dim) return;
  for (int w : cands) {
    double v = value;
    for (int m : tuple) v = std::max(v, adj.value(m, w));
    std::vector<int> next;
    for (int x : cands)
      if (x != w && adj.edge_value.count(adj.key(w, x))) next.push_back(x);
    tuple.push_back(w);
    extend(adj, tuple, v, next, max_dim, cx);
    tuple.pop_back();
  }
}

}  // namespace

FilteredFlagComplex build_complex(const FilteredDigraph& g, int max_dim) {
  if (max_dim < 0) throw ValidationError("max_dim must be >= 0");

  AdjacencyIndex adj;
  adj.n = g.vertex_count();
  adj.out.resize(adj.n);
  for (const Edge& e : g.edges) {
    adj.out[e.src].push_back(e.dst);
    adj.edge_value[adj.key(e.src, e.dst)] =
        std::max({e.value, g.vertex_values[e.src], g.vertex_values[e.dst]});
  }
  for (auto& nbrs : adj.out) std::sort(nbrs.begin(), nbrs.end());

  FilteredFlagComplex cx;
  cx.max_dim = max_dim;
  cx.vertex_count = adj.n;
  cx.vertex_labels = g.vertex_labels;
  cx.simplices.resize(max_dim + 1);
  std::vector<int> tuple;
  for (int v = 0; v < adj.n; ++v) {
    tuple.assign(1, v);
    extend(adj, tuple, g.vertex_values[v], adj.out[v], max_dim, cx);
  }
  for (auto& list : cx.simplices)
    std::sort(list.begin(), list.end(), simplex_less);
  cx.grid = filtration_grid(g);
  return cx;
}

std::span<const Simplex> simplices_at(const FilteredFlagComplex& cx, int k,
                                      double a) {
  if (k < 0 || k > cx.max_dim)
    throw ValidationError("dimension " + std::to_string(k) +
                          " outside [0," + std::to_string(cx.max_dim) + "]");
  if (std::isnan(a)) throw ValidationError("filtration value is NaN");
  const auto& list = cx.simplices[k];
  auto end = std::upper_bound(
      list.begin(), list.end(), a,
      [](double t, const Simplex& s) { return t < s.value; });
  return {list.data(), static_cast<std::size_t>(end - list.begin())};
}

}  // namespace pdfl
