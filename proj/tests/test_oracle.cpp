#include <doctest.h>

#include <random>

#include "pdfl/errors.hpp"
#include "pdfl/oracle.hpp"
#include "pdfl/persistent.hpp"
#include "test_util.hpp"

using namespace pdfl;

TEST_SUITE_BEGIN("oracle");

TEST_CASE("exact rank of the fixture boundary matrices") {
  const auto cx = build_complex(testutil::load_flag("g3.flag"), 2);
  CHECK(exact_rank(rational_boundary(cx, 1, 0.0).m) == 4);
  CHECK(exact_rank(rational_boundary(cx, 2, 0.0).m) == 1);
  CHECK(exact_rank(RationalDenseMatrix::Identity(6, 6)) == 6);
  CHECK(exact_rank(RationalDenseMatrix::Zero(4, 3)) == 0);
}

TEST_CASE("exact kernel spans the nullspace") {
  const auto cx = build_complex(testutil::load_flag("g3.flag"), 2);
  const auto B = rational_boundary(cx, 1, 0.0);
  const auto K = exact_kernel(B.m);
  CHECK(K.cols() == 3);  // 7 columns, rank 4
  // lazyProduct: plain operator* on rational matrices trips a scalar
  // promotion probe that boost's number type rejects at compile time
  const RationalDenseMatrix product = B.m.lazyProduct(K);
  for (Eigen::Index i = 0; i < product.rows(); ++i)
    for (Eigen::Index j = 0; j < product.cols(); ++j)
      CHECK(product(i, j) == 0);
  CHECK(exact_rank(K) == 3);
}

TEST_CASE("rational assembly matches the production boundary matrix") {
  const auto cx = build_complex(testutil::load_flag("triangle.flag"), 2);
  for (int k : {1, 2}) {
    const auto ours = rational_boundary(cx, k, 5.0);
    const auto theirs = boundary_matrix(cx, k, 5.0);
    REQUIRE(ours.m.rows() == theirs.row_count());
    REQUIRE(ours.m.cols() == theirs.col_count());
    const auto dense = theirs.dense<int>();
    for (Eigen::Index i = 0; i < ours.m.rows(); ++i)
      for (Eigen::Index j = 0; j < ours.m.cols(); ++j)
        CHECK(ours.m(i, j) == dense(i, j));
  }
}

TEST_CASE("Betti numbers of the worked fixtures") {
  const auto g3 = build_complex(testutil::load_flag("g3.flag"), 2);
  CHECK(oracle_betti(g3, 0, 0.0) == 1);
  CHECK(oracle_betti(g3, 1, 0.0) == 2);
  CHECK(oracle_betti(g3, 2, 0.0) == 0);

  const auto g2 = build_complex(testutil::load_flag("tournament4.flag"), 3);
  CHECK(oracle_betti(g2, 0, 0.0) == 1);
  CHECK(oracle_betti(g2, 1, 0.0) == 0);
  CHECK(oracle_betti(g2, 2, 0.0) == 0);
  CHECK(oracle_betti(g2, 3, 0.0) == 0);
}

TEST_CASE("persistent Betti numbers of the two-component fixture") {
  const auto cx = build_complex(testutil::load_flag("merging_components.flag"), 2);
  CHECK(oracle_persistent_betti(cx, 0, 0.0, 1.0) == 1);
  CHECK(oracle_persistent_betti(cx, 0, 1.0, 2.0) == 1);
  for (double a : {0.0, 1.0, 2.0})
    CHECK(oracle_persistent_betti(cx, 0, a, a) == oracle_betti(cx, 0, a));
}

TEST_CASE("degenerate pairs collapse to plain Betti numbers") {
  const auto cx = build_complex(testutil::load_flag("triangle.flag"), 2);
  for (int k : {0, 1, 2})
    for (double a : cx.grid)
      CHECK(oracle_persistent_betti(cx, k, a, a) == oracle_betti(cx, k, a));
}

TEST_CASE("column cap") {
  CHECK_THROWS_AS(exact_rank(RationalDenseMatrix::Zero(1, 301)),
                  CapacityError);
  CHECK_THROWS_AS(exact_kernel(RationalDenseMatrix::Zero(1, 301)),
                  CapacityError);
  CHECK_NOTHROW(exact_rank(RationalDenseMatrix::Zero(1, 300)));
  CHECK_NOTHROW(exact_rank(RationalDenseMatrix::Zero(1, 301), 400));
}

TEST_CASE("spectral route agrees with the oracle on random graphs") {
  std::mt19937 rng(20240815);
  std::uniform_int_distribution<int> nverts(1, 6);
  std::uniform_int_distribution<int> level(0, 2);
  std::bernoulli_distribution edge_coin(0.4);

  for (int trial = 0; trial < 20; ++trial) {
    CAPTURE(trial);
    const int n = nverts(rng);
    std::vector<double> values(static_cast<std::size_t>(n));
    for (auto& v : values) v = level(rng);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v)
        if (u != v && edge_coin(rng))
          edges.push_back(
              {u, v, std::max({values[u], values[v], double(level(rng))})});
    const auto cx = build_complex(make_digraph(values, edges), 3);
    for (int k : {0, 1, 2}) {
      for (std::size_t i = 0; i < cx.grid.size(); ++i) {
        const double a = cx.grid[i];
        const double b = i + 1 < cx.grid.size() ? cx.grid[i + 1] : a;
        const auto rec =
            persistent_spectra(persistent_laplacian(cx, k, a, b));
        CHECK(rec.betti == oracle_persistent_betti(cx, k, a, b));
        const auto plain = spectra(laplacian(cx, k, a));
        CHECK(plain.betti == oracle_betti(cx, k, a));
      }
    }
  }
}

TEST_CASE("pair validation") {
  const auto cx = build_complex(testutil::load_flag("merging_components.flag"), 2);
  CHECK_THROWS_AS(oracle_persistent_betti(cx, 0, 2.0, 1.0), ValidationError);
}

TEST_SUITE_END();
