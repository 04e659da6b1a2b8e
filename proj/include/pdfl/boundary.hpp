#pragma once

#include <Eigen/Core>
#include <iosfwd>
#include <utility>
#include <vector>

#include "pdfl/flag_complex.hpp"

namespace pdfl {

/// Signed boundary matrix of the sublevel complex at filtration value a:
/// column j holds the faces of the j-th k-simplex with alternating signs,
/// rows indexed by the (k-1)-simplices.  Stored column-sparse; entries are
/// exactly +/-1.  k = 0 gives the zero map out of C_0 (no rows).
struct BoundaryMatrix {
  int k = 0;
  double a = 0.0;
  std::vector<Simplex> rows;  // (k-1)-simplices at a, canonical order
  std::vector<Simplex> cols;  // k-simplices at a, canonical order
  std::vector<std::vector<std::pair<Eigen::Index, int>>> entries;  // per column

  Eigen::Index row_count() const {
    return static_cast<Eigen::Index>(rows.size());
  }
  Eigen::Index col_count() const {
    return static_cast<Eigen::Index>(cols.size());
  }

  /// Dense copy with entries cast to Scalar.
  template <typename Scalar = double>
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> dense() const {
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> m =
        Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>::Zero(
            row_count(), col_count());
    for (Eigen::Index c = 0; c < col_count(); ++c)
      for (auto [r, s] : entries[c]) m(r, c) = Scalar(s);
    return m;
  }
};

/// Boundary matrix of C_k at filtration value a.  Rejects k outside
/// [0, max_dim].
BoundaryMatrix boundary_matrix(const FilteredFlagComplex& cx, int k, double a);

/// Checks d_{k-1} . d_k = 0 in integer arithmetic for every k.
/// Returns true iff all compositions vanish.
bool verify_chain_complex(const FilteredFlagComplex& cx, double a);

/// Writes "row col value" triplets, one per line, in column-major order.
void dump_triplets(const BoundaryMatrix& b, std::ostream& os);

}  // namespace pdfl
