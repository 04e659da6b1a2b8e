#pragma once

#include <Eigen/Core>
#include <optional>

#include "pdfl/boundary.hpp"
#include "pdfl/errors.hpp"

namespace pdfl {

/// Combinatorial Laplacian L_k = B_{k+1} B_{k+1}^T + B_k^T B_k of the
/// sublevel complex at a; symmetric positive semidefinite.
struct LaplacianMatrix {
  int k = 0;
  double a = 0.0;
  Eigen::MatrixXd matrix;
};

LaplacianMatrix laplacian(const FilteredFlagComplex& cx, int k, double a,
                          Eigen::Index max_size = 2000);

struct SpectraOptions {
  /// Eigenvalues <= zero_tol count as zero.  Non-positive selects the
  /// automatic threshold 1e-8 * max(1, ||L||_inf).
  double zero_tol = 0.0;
  bool want_eigenvectors = false;
};

/// Eigenvalues of one (persistent) Laplacian, ascending, with the kernel
/// dimension split off.  For the non-persistent case b == a.
struct SpectraRecord {
  int k = 0;
  double a = 0.0;
  double b = 0.0;
  Eigen::VectorXd eigenvalues;                  // ascending, clamped >= 0
  int betti = 0;                                // count of zero eigenvalues
  std::optional<double> lambda_min_nonzero;     // absent if all eigenvalues zero
  std::optional<Eigen::MatrixXd> eigenvectors;  // columns match eigenvalues

  friend bool operator==(const SpectraRecord& x, const SpectraRecord& y) {
    return x.k == y.k && x.a == y.a && x.b == y.b && x.betti == y.betti &&
           x.eigenvalues.size() == y.eigenvalues.size() &&
           (x.eigenvalues.size() == 0 || x.eigenvalues == y.eigenvalues) &&
           x.lambda_min_nonzero == y.lambda_min_nonzero;
  }
};

/// Full spectrum of L via a self-adjoint solver.  The 0x0 Laplacian yields an
/// empty spectrum with betti 0.
SpectraRecord spectra(const LaplacianMatrix& L,
                      const SpectraOptions& options = {});

namespace detail {
SpectraRecord spectra_of(const Eigen::MatrixXd& m, int k, double a, double b,
                         const SpectraOptions& options);
}

/// True iff ||L v - lambda v|| <= tol * ||v||.  Rejects non-square L,
/// mismatched sizes, and v = 0.
template <typename DerivedL, typename DerivedV>
bool eigenvector_check(const Eigen::MatrixBase<DerivedL>& L,
                       const Eigen::MatrixBase<DerivedV>& v, double lambda,
                       double tol = 1e-9) {
  if (L.rows() != L.cols())
    throw ValidationError("eigenvector_check needs a square matrix");
  if (v.size() != L.rows() || v.cols() != 1)
    throw ValidationError("vector length does not match matrix size");
  const double norm = v.norm();
  if (norm == 0.0)
    throw ValidationError("the zero vector is not an eigenvector");
  return (L * v - lambda * v).norm() <= tol * norm;
}

template <typename DerivedV>
bool eigenvector_check(const LaplacianMatrix& L,
                       const Eigen::MatrixBase<DerivedV>& v, double lambda,
                       double tol = 1e-9) {
  return eigenvector_check(L.matrix, v, lambda, tol);
}

}  // namespace pdfl
