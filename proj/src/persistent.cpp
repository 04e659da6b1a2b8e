#include "pdfl/persistent.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "pdfl/rational.hpp"

namespace pdfl {

namespace {

// Column reduction tracking: eliminate rows of M one at a time with column
// operations mirrored onto an identity-seeded transform T.  Columns never
// used as a pivot end up zero, and their T-columns form a kernel basis.
// `is_zero` supplies the scalar-appropriate negligibility test; pivots are
// chosen by largest absolute value so floating factors stay <= 1.
template <typename Matrix, typename IsZero>
Matrix kernel_by_column_reduction(Matrix M, IsZero is_zero) {
  using Scalar = typename Matrix::Scalar;
  using std::abs;
  const Eigen::Index n = M.cols();
  Matrix T = Matrix::Identity(n, n);
  std::vector<Eigen::Index> active(n);
  for (Eigen::Index c = 0; c < n; ++c) active[c] = c;

  for (Eigen::Index r = 0; r < M.rows() && !active.empty(); ++r) {
    std::size_t best = active.size();
    for (std::size_t i = 0; i < active.size(); ++i) {
      const Scalar& x = M(r, active[i]);
      if (is_zero(x)) continue;
      if (best == active.size() ||
          abs(x) > abs(M(r, active[best]))) best = i;
    }
    if (best == active.size()) continue;
    const Eigen::Index p = active[best];
    for (std::size_t i = 0; i < active.size(); ++i) {
      const Eigen::Index c = active[i];
      if (c == p || is_zero(M(r, c))) continue;
      const Scalar f = M(r, c) / M(r, p);
      M.col(c) -= f * M.col(p);
      T.col(c) -= f * T.col(p);
      M(r, c) = Scalar(0);
    }
    active.erase(active.begin() + static_cast<std::ptrdiff_t>(best));
  }

  Matrix K(n, static_cast<Eigen::Index>(active.size()));
  for (std::size_t i = 0; i < active.size(); ++i)
    K.col(static_cast<Eigen::Index>(i)) = T.col(active[i]);
  return K;
}

double max_column_norm(const Eigen::MatrixXd& m) {
  double best = 0.0;
  for (Eigen::Index c = 0; c < m.cols(); ++c)
    best = std::max(best, m.col(c).norm());
  return best;
}

}  // namespace

Eigen::MatrixXd orthonormal_columns(const Eigen::MatrixXd& m) {
  const double drop = 1e-12 * std::max(1.0, max_column_norm(m));
  std::vector<Eigen::Index> remaining;
  for (Eigen::Index c = 0; c < m.cols(); ++c) remaining.push_back(c);
  Eigen::MatrixXd Z(m.rows(), m.cols());
  Eigen::Index rank = 0;
  Eigen::MatrixXd work = m;
  while (!remaining.empty()) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < remaining.size(); ++i)
      if (work.col(remaining[i]).norm() > work.col(remaining[best]).norm())
        best = i;
    Eigen::VectorXd v = work.col(remaining[best]);
    remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(best));
    // two projection passes keep the basis orthonormal to machine precision
    for (int pass = 0; pass < 2; ++pass)
      v -= Z.leftCols(rank) * (Z.leftCols(rank).transpose() * v);
    const double norm = v.norm();
    if (norm <= drop) continue;
    Z.col(rank++) = v / norm;
    for (Eigen::Index c : remaining)
      work.col(c) -= Z.col(rank - 1) * Z.col(rank - 1).dot(work.col(c));
  }
  return Z.leftCols(rank);
}

PersistentChainBasis persistent_chain_basis(const FilteredFlagComplex& cx,
                                            int k_plus_1, double a, double b,
                                            const PersistentOptions& options) {
  if (a > b)
    throw ValidationError("persistent pair needs a <= b");
  PersistentChainBasis basis{k_plus_1, a, b, {}};
  const BoundaryMatrix B = boundary_matrix(cx, k_plus_1, b);
  const Eigen::Index n = B.col_count();
  if (k_plus_1 == 0) {
    basis.Z = Eigen::MatrixXd::Identity(n, n);
    return basis;
  }
  const auto rows_at_a =
      static_cast<Eigen::Index>(simplices_at(cx, k_plus_1 - 1, a).size());
  const Eigen::Index new_rows = B.row_count() - rows_at_a;
  if (new_rows == 0) {
    basis.Z = Eigen::MatrixXd::Identity(n, n);
    return basis;
  }

  using Reduction = PersistentOptions::Reduction;
  const bool exact =
      options.reduction == Reduction::Exact ||
      (options.reduction == Reduction::Auto && n <= options.exact_max_cols);
  if (exact) {
    RationalDenseMatrix N = RationalDenseMatrix::Zero(new_rows, n);
    for (Eigen::Index c = 0; c < n; ++c)
      for (auto [r, s] : B.entries[c])
        if (r >= rows_at_a) N(r - rows_at_a, c) = s;
    RationalDenseMatrix K = kernel_by_column_reduction(
        std::move(N), [](const Rational& x) { return x == 0; });
    basis.Z = orthonormal_columns(K.unaryExpr(&to_double));
  } else {
    Eigen::MatrixXd N = Eigen::MatrixXd::Zero(new_rows, n);
    for (Eigen::Index c = 0; c < n; ++c)
      for (auto [r, s] : B.entries[c])
        if (r >= rows_at_a) N(r - rows_at_a, c) = s;
    const double tol = options.eps_sub * std::max(1.0, max_column_norm(N));
    Eigen::MatrixXd K = kernel_by_column_reduction(
        std::move(N), [tol](double x) { return std::abs(x) <= tol; });
    basis.Z = orthonormal_columns(K);
  }
  return basis;
}

Eigen::MatrixXd persistent_boundary(const FilteredFlagComplex& cx,
                                    const PersistentChainBasis& basis) {
  if (basis.k_plus_1 == 0)
    return Eigen::MatrixXd::Zero(0, basis.Z.cols());
  const auto rows_at_a = static_cast<Eigen::Index>(
      simplices_at(cx, basis.k_plus_1 - 1, basis.a).size());
  if (basis.k_plus_1 > cx.max_dim)
    return Eigen::MatrixXd::Zero(rows_at_a, 0);
  const Eigen::MatrixXd full =
      boundary_matrix(cx, basis.k_plus_1, basis.b).dense() * basis.Z;
  return full.topRows(rows_at_a);
}

Eigen::MatrixXd persistent_boundary(const FilteredFlagComplex& cx,
                                    int k_plus_1, double a, double b,
                                    const PersistentOptions& options) {
  return persistent_boundary(
      cx, persistent_chain_basis(cx, k_plus_1, a, b, options));
}

PersistentLaplacian persistent_laplacian(const FilteredFlagComplex& cx, int k,
                                         const PersistentChainBasis& basis,
                                         Eigen::Index max_size) {
  const auto n =
      static_cast<Eigen::Index>(simplices_at(cx, k, basis.a).size());
  if (n > max_size)
    throw CapacityError("persistent Laplacian of dimension " +
                        std::to_string(n) + " exceeds the dense cap " +
                        std::to_string(max_size));
  PersistentLaplacian L{k, basis.a, basis.b, {}, {}};
  L.boundary = persistent_boundary(cx, basis);
  L.matrix = Eigen::MatrixXd::Zero(n, n);
  L.matrix.noalias() += L.boundary * L.boundary.transpose();
  if (k >= 1) {
    Eigen::MatrixXd down = boundary_matrix(cx, k, basis.a).dense();
    L.matrix.noalias() += down.transpose() * down;
  }
  return L;
}

PersistentLaplacian persistent_laplacian(const FilteredFlagComplex& cx, int k,
                                         double a, double b,
                                         const PersistentOptions& options,
                                         Eigen::Index max_size) {
  if (k < 0 || k > cx.max_dim)
    throw ValidationError("dimension " + std::to_string(k) + " outside [0," +
                          std::to_string(cx.max_dim) + "]");
  if (a > b) throw ValidationError("persistent pair needs a <= b");
  PersistentChainBasis basis;
  if (k + 1 <= cx.max_dim) {
    basis = persistent_chain_basis(cx, k + 1, a, b, options);
  } else {
    basis = {k + 1, a, b, Eigen::MatrixXd::Zero(0, 0)};
  }
  return persistent_laplacian(cx, k, basis, max_size);
}

SpectraRecord persistent_spectra(const PersistentLaplacian& L,
                                 const SpectraOptions& options) {
  return detail::spectra_of(L.matrix, L.k, L.a, L.b, options);
}

}  // namespace pdfl
