#include "pdfl/laplacian.hpp"

#include <Eigen/Eigenvalues>
#include <string>

namespace pdfl {

LaplacianMatrix laplacian(const FilteredFlagComplex& cx, int k, double a,
                          Eigen::Index max_size) {
  const auto n = static_cast<Eigen::Index>(simplices_at(cx, k, a).size());
  if (n > max_size)
    throw CapacityError("Laplacian of dimension " + std::to_string(n) +
                        " exceeds the dense cap " + std::to_string(max_size));
  LaplacianMatrix L{k, a, Eigen::MatrixXd::Zero(n, n)};
  if (k + 1 <= cx.max_dim) {
    Eigen::MatrixXd up = boundary_matrix(cx, k + 1, a).dense();
    L.matrix.noalias() += up * up.transpose();
  }
  if (k >= 1) {
    Eigen::MatrixXd down = boundary_matrix(cx, k, a).dense();
    L.matrix.noalias() += down.transpose() * down;
  }
  return L;
}

namespace detail {

SpectraRecord spectra_of(const Eigen::MatrixXd& m, int k, double a, double b,
                         const SpectraOptions& options) {
  SpectraRecord rec;
  rec.k = k;
  rec.a = a;
  rec.b = b;
  rec.eigenvalues.resize(0);
  if (m.rows() == 0) return rec;

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(
      m, options.want_eigenvectors ? Eigen::ComputeEigenvectors
                                   : Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw SolverError("eigensolver failed on a " + std::to_string(m.rows()) +
                      "x" + std::to_string(m.cols()) + " matrix (inf-norm " +
                      std::to_string(m.cwiseAbs().rowwise().sum().maxCoeff()) +
                      ")");
  rec.eigenvalues = solver.eigenvalues().cwiseMax(0.0);
  if (options.want_eigenvectors) rec.eigenvectors = solver.eigenvectors();

  double tol = options.zero_tol;
  if (tol <= 0.0) {
    const double inf_norm = m.cwiseAbs().rowwise().sum().maxCoeff();
    tol = 1e-8 * std::max(1.0, inf_norm);
  }
  for (Eigen::Index i = 0; i < rec.eigenvalues.size(); ++i) {
    if (rec.eigenvalues[i] <= tol) {
      rec.eigenvalues[i] = 0.0;
      ++rec.betti;
    } else if (!rec.lambda_min_nonzero) {
      rec.lambda_min_nonzero = rec.eigenvalues[i];
    }
  }
  return rec;
}

}  // namespace detail

SpectraRecord spectra(const LaplacianMatrix& L, const SpectraOptions& options) {
  return detail::spectra_of(L.matrix, L.k, L.a, L.a, options);
}

}  // namespace pdfl
