#pragma once

#include <Eigen/Core>

#include "pdfl/laplacian.hpp"

namespace pdfl {

struct PersistentOptions {
  enum class Reduction {
    Auto,      // exact when the boundary matrix has <= exact_max_cols columns
    Exact,     // rational column reduction
    Floating,  // double column reduction with a relative zero threshold
  };
  Reduction reduction = Reduction::Auto;
  Eigen::Index exact_max_cols = 500;
  /// Relative threshold for the floating reduction: an entry is treated as
  /// zero when |entry| <= eps_sub * max(1, largest original column norm).
  double eps_sub = 1e-10;
};

/// Orthonormal basis Z (columns) of the persistent chain group: the
/// k+1-chains of the sublevel complex at b whose boundary lies in the span of
/// the k-simplices already present at a.  Z has count(k+1, b) rows.
struct PersistentChainBasis {
  int k_plus_1 = 0;
  double a = 0.0;
  double b = 0.0;
  Eigen::MatrixXd Z;
};

/// Computes the basis by extracting the kernel of the rows of B_{k+1}^b
/// indexed by k-simplices born after a, then orthonormalizing.  With no such
/// rows the basis is the identity.  Rejects a > b and k+1 outside
/// [0, max_dim].
PersistentChainBasis persistent_chain_basis(
    const FilteredFlagComplex& cx, int k_plus_1, double a, double b,
    const PersistentOptions& options = {});

/// Persistent boundary map B_{k+1}^{a,b} = rows-at-a of (B_{k+1}^b Z):
/// count(k, a) x rank(Z).  The overload taking a basis lets callers swap in a
/// different orthonormal basis of the same subspace; the resulting Laplacian
/// spectra are invariant under that choice.
Eigen::MatrixXd persistent_boundary(const FilteredFlagComplex& cx,
                                    const PersistentChainBasis& basis);
Eigen::MatrixXd persistent_boundary(const FilteredFlagComplex& cx,
                                    int k_plus_1, double a, double b,
                                    const PersistentOptions& options = {});

/// Persistent Laplacian
///   L_k^{a,b} = B^{a,b} (B^{a,b})^T + (B_k^a)^T B_k^a,
/// a symmetric PSD operator on the k-chains of the sublevel complex at a.
/// Its kernel dimension is the persistent Betti number beta_k^{a,b}.
struct PersistentLaplacian {
  int k = 0;
  double a = 0.0;
  double b = 0.0;
  Eigen::MatrixXd boundary;  // B^{a,b}
  Eigen::MatrixXd matrix;    // L_k^{a,b}
};

PersistentLaplacian persistent_laplacian(const FilteredFlagComplex& cx, int k,
                                         double a, double b,
                                         const PersistentOptions& options = {},
                                         Eigen::Index max_size = 2000);
PersistentLaplacian persistent_laplacian(const FilteredFlagComplex& cx, int k,
                                         const PersistentChainBasis& basis,
                                         Eigen::Index max_size = 2000);

SpectraRecord persistent_spectra(const PersistentLaplacian& L,
                                 const SpectraOptions& options = {});

/// Pivoted Gram-Schmidt with reorthogonalization; returns a matrix with
/// orthonormal columns spanning the column space of m (rank-revealing: near
/// dependent columns are dropped).
Eigen::MatrixXd orthonormal_columns(const Eigen::MatrixXd& m);

}  // namespace pdfl
