#include "pdfl/oracle.hpp"

#include <map>
#include <string>
#include <utility>

#include "pdfl/errors.hpp"

namespace pdfl {

namespace {

void check_width(const RationalDenseMatrix& m, Eigen::Index max_cols,
                 const char* what) {
  if (m.cols() > max_cols)
    throw CapacityError(std::string(what) + ": " + std::to_string(m.cols()) +
                        " columns exceed the oracle cap " +
                        std::to_string(max_cols));
}

// Reduced row echelon form in place; returns (pivot row, pivot column) pairs.
std::vector<std::pair<Eigen::Index, Eigen::Index>> rref(
    RationalDenseMatrix& m) {
  std::vector<std::pair<Eigen::Index, Eigen::Index>> pivots;
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < m.cols() && r < m.rows(); ++c) {
    Eigen::Index pr = -1;
    for (Eigen::Index i = r; i < m.rows(); ++i)
      if (m(i, c) != 0) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    m.row(r).swap(m.row(pr));
    m.row(r) /= Rational(m(r, c));
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      if (i != r && m(i, c) != 0) {
        const Rational f = m(i, c);
        m.row(i) -= f * m.row(r);
      }
    pivots.push_back({r, c});
    ++r;
  }
  return pivots;
}

}  // namespace

RationalMatrix rational_boundary(const FilteredFlagComplex& cx, int k,
                                 double a) {
  RationalMatrix b;
  auto cols = simplices_at(cx, k, a);
  b.cols.assign(cols.begin(), cols.end());
  if (k >= 1) {
    auto rows = simplices_at(cx, k - 1, a);
    b.rows.assign(rows.begin(), rows.end());
  }
  b.m = RationalDenseMatrix::Zero(static_cast<Eigen::Index>(b.rows.size()),
                                  static_cast<Eigen::Index>(b.cols.size()));
  if (k == 0) return b;

  std::map<std::vector<int>, Eigen::Index> row_of;
  for (std::size_t r = 0; r < b.rows.size(); ++r)
    row_of[b.rows[r].vertices] = static_cast<Eigen::Index>(r);
  for (std::size_t c = 0; c < b.cols.size(); ++c) {
    const auto& verts = b.cols[c].vertices;
    int sign = 1;
    for (int i = 0; i <= k; ++i, sign = -sign) {
      std::vector<int> face;
      face.reserve(static_cast<std::size_t>(k));
      for (int j = 0; j <= k; ++j)
        if (j != i) face.push_back(verts[j]);
      b.m(row_of.at(face), static_cast<Eigen::Index>(c)) = sign;
    }
  }
  return b;
}

Eigen::Index exact_rank(RationalDenseMatrix m, Eigen::Index max_cols) {
  check_width(m, max_cols, "exact_rank");
  return static_cast<Eigen::Index>(rref(m).size());
}

RationalDenseMatrix exact_kernel(RationalDenseMatrix m,
                                 Eigen::Index max_cols) {
  check_width(m, max_cols, "exact_kernel");
  const Eigen::Index n = m.cols();
  const auto pivots = rref(m);
  std::vector<bool> is_pivot_col(static_cast<std::size_t>(n), false);
  for (auto [pr, pc] : pivots) is_pivot_col[static_cast<std::size_t>(pc)] = true;

  RationalDenseMatrix K = RationalDenseMatrix::Zero(
      n, n - static_cast<Eigen::Index>(pivots.size()));
  Eigen::Index kcol = 0;
  for (Eigen::Index free = 0; free < n; ++free) {
    if (is_pivot_col[static_cast<std::size_t>(free)]) continue;
    K(free, kcol) = 1;
    for (auto [pr, pc] : pivots) K(pc, kcol) = -m(pr, free);
    ++kcol;
  }
  return K;
}

int oracle_betti(const FilteredFlagComplex& cx, int k, double a,
                 Eigen::Index max_cols) {
  const auto nk = static_cast<Eigen::Index>(simplices_at(cx, k, a).size());
  Eigen::Index rank_down = 0;
  if (k >= 1)
    rank_down = exact_rank(rational_boundary(cx, k, a).m, max_cols);
  Eigen::Index rank_up = 0;
  if (k + 1 <= cx.max_dim)
    rank_up = exact_rank(rational_boundary(cx, k + 1, a).m, max_cols);
  return static_cast<int>(nk - rank_down - rank_up);
}

int oracle_persistent_betti(const FilteredFlagComplex& cx, int k, double a,
                            double b, Eigen::Index max_cols) {
  if (a > b) throw ValidationError("persistent pair needs a <= b");
  const auto nka = static_cast<Eigen::Index>(simplices_at(cx, k, a).size());
  const auto nkb = static_cast<Eigen::Index>(simplices_at(cx, k, b).size());

  RationalDenseMatrix K;
  if (k == 0) {
    K = RationalDenseMatrix::Identity(nka, nka);
  } else {
    K = exact_kernel(rational_boundary(cx, k, a).m, max_cols);
  }

  RationalDenseMatrix R(nkb, 0);
  Eigen::Index rank_R = 0;
  if (k + 1 <= cx.max_dim) {
    R = std::move(rational_boundary(cx, k + 1, b).m);
    rank_R = exact_rank(R, max_cols);
  }

  // [K zero-padded to length nkb | R]; simplices at a prefix those at b.
  RationalDenseMatrix C = RationalDenseMatrix::Zero(nkb, K.cols() + R.cols());
  C.topLeftCorner(nka, K.cols()) = K;
  C.rightCols(R.cols()) = R;
  return static_cast<int>(exact_rank(std::move(C), max_cols) - rank_R);
}

}  // namespace pdfl
