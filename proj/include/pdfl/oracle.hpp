#pragma once

#include <vector>

#include "pdfl/flag_complex.hpp"
#include "pdfl/rational.hpp"

namespace pdfl {

/// Exact rational matrix with the simplices labelling its rows and columns.
struct RationalMatrix {
  RationalDenseMatrix m;
  std::vector<Simplex> rows;
  std::vector<Simplex> cols;
};

/// Cross-check oracle.  Betti numbers computed over Q by Gaussian
/// elimination, assembled and reduced independently of the spectral pipeline.
/// Every routine rejects matrices wider than max_cols (default 300); the
/// oracle is a correctness reference, not a production path.

inline constexpr Eigen::Index kOracleMaxCols = 300;

/// Boundary matrix of C_k at a, assembled from scratch with rational entries.
RationalMatrix rational_boundary(const FilteredFlagComplex& cx, int k,
                                 double a);

/// Rank over Q by row echelon reduction.
Eigen::Index exact_rank(RationalDenseMatrix m,
                        Eigen::Index max_cols = kOracleMaxCols);

/// Kernel basis over Q from the reduced row echelon form; columns span ker m.
RationalDenseMatrix exact_kernel(RationalDenseMatrix m,
                                 Eigen::Index max_cols = kOracleMaxCols);

/// beta_k at a:  nullity(B_k) - rank(B_{k+1}).
int oracle_betti(const FilteredFlagComplex& cx, int k, double a,
                 Eigen::Index max_cols = kOracleMaxCols);

/// Persistent beta_k^{a,b} = dim Z_k^a - dim(Z_k^a  intersect  im B_{k+1}^b),
/// computed as rank([K | R]) - rank(R) where K embeds a kernel basis of B_k^a
/// into the chain group at b (zero-padded; sublevel simplices are a prefix)
/// and R = B_{k+1}^b.
int oracle_persistent_betti(const FilteredFlagComplex& cx, int k, double a,
                            double b, Eigen::Index max_cols = kOracleMaxCols);

}  // namespace pdfl
