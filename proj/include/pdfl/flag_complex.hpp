#pragma once

#include <span>
#include <string>
#include <vector>

#include "pdfl/model.hpp"

namespace pdfl {

/// Ordered k-simplex (v0,...,vk): every (vi,vj) with i<j is a digraph edge.
/// `value` is the filtration value at which the simplex appears: the max over
/// its vertices and edges, so sublevel complexes are nested.
struct Simplex {
  std::vector<int> vertices;
  double value = 0.0;

  int dim() const { return static_cast<int>(vertices.size()) - 1; }
  friend bool operator==(const Simplex&, const Simplex&) = default;
};

/// Simplices of the directed flag complex up to dimension max_dim, grouped by
/// dimension.  Within each dimension the list is sorted by (value, vertex
/// tuple), so the simplices of any sublevel complex form a prefix.
struct FilteredFlagComplex {
  int max_dim = 0;
  int vertex_count = 0;
  std::vector<std::string> vertex_labels;
  std::vector<std::vector<Simplex>> simplices;  // simplices[k] = k-simplices
  std::vector<double> grid;                     // filtration values present

  int count(int k) const {
    return k >= 0 && k <= max_dim ? static_cast<int>(simplices[k].size()) : 0;
  }
};

/// Order on simplices of equal dimension used throughout: filtration value
/// first, then lexicographic vertex tuple.
bool simplex_less(const Simplex& x, const Simplex& y);

/// Enumerates all directed cliques of g on up to max_dim+1 vertices.
/// Deterministic: independent of input edge order.
FilteredFlagComplex build_complex(const FilteredDigraph& g, int max_dim);

/// k-simplices alive at filtration value a, as a prefix of simplices[k].
/// Rejects k outside [0, max_dim] and NaN a.
std::span<const Simplex> simplices_at(const FilteredFlagComplex& cx, int k,
                                      double a);

}  // namespace pdfl
