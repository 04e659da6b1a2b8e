#include <doctest.h>

#include <Eigen/Core>
#include <numbers>

#include "pdfl/errors.hpp"
#include "pdfl/laplacian.hpp"
#include "test_util.hpp"

using namespace pdfl;

namespace {

Eigen::MatrixXi as_int(const Eigen::MatrixXd& m) {
  return m.cast<int>();
}

}  // namespace

TEST_SUITE_BEGIN("laplacian");

TEST_CASE("five-vertex fixture Laplacians are the printed integer matrices") {
  const auto cx = build_complex(testutil::load_flag("g3.flag"), 2);

  Eigen::MatrixXi L0(5, 5);
  L0 <<  2, -1,  0, -1,  0,
        -1,  3, -1, -1,  0,
         0, -1,  3, -1, -1,
        -1, -1, -1,  4, -1,
         0,  0, -1, -1,  2;
  CHECK(as_int(laplacian(cx, 0, 0.0).matrix) == L0);

  Eigen::MatrixXi L1(7, 7);
  L1 <<  2, -1,  0,  0, -1, -1,  1,
        -1,  2,  1,  0, -1,  0,  0,
         0,  1,  3, -1,  0,  0,  0,
         0,  0, -1,  2,  0, -1, -1,
        -1, -1,  0,  0,  3,  0, -1,
        -1,  0,  0, -1,  0,  3, -1,
         1,  0,  0, -1, -1, -1,  2;
  CHECK(as_int(laplacian(cx, 1, 0.0).matrix) == L1);

  Eigen::MatrixXi L2(1, 1);
  L2 << 3;
  CHECK(as_int(laplacian(cx, 2, 0.0).matrix) == L2);
}

TEST_CASE("five-vertex fixture spectra and Betti numbers") {
  const auto cx = build_complex(testutil::load_flag("g3.flag"), 2);
  const double s2 = std::numbers::sqrt2;

  const auto s0 = spectra(laplacian(cx, 0, 0.0));
  testutil::check_spectrum(s0.eigenvalues, {0, 3 - s2, 3, 3 + s2, 5});
  CHECK(s0.betti == 1);
  REQUIRE(s0.lambda_min_nonzero.has_value());
  CHECK(*s0.lambda_min_nonzero == doctest::Approx(3 - s2).epsilon(1e-12));

  const auto s1 = spectra(laplacian(cx, 1, 0.0));
  testutil::check_spectrum(s1.eigenvalues, {0, 0, 3 - s2, 3, 3, 3 + s2, 5});
  CHECK(s1.betti == 2);

  const auto s2rec = spectra(laplacian(cx, 2, 0.0));
  testutil::check_spectrum(s2rec.eigenvalues, {3});
  CHECK(s2rec.betti == 0);
  CHECK(s2rec.k == 2);
  CHECK(s2rec.a == 0.0);
  CHECK(s2rec.b == 0.0);
}

TEST_CASE("square digraphs share L0 but differ in directed structure") {
  const auto g1 = build_complex(testutil::load_flag("square_g1.flag"), 2);
  const auto g2 = build_complex(testutil::load_flag("square_g2.flag"), 2);

  Eigen::MatrixXi L0(4, 4);
  L0 <<  2, -1,  0, -1,
        -1,  2, -1,  0,
         0, -1,  2, -1,
        -1,  0, -1,  2;
  CHECK(as_int(laplacian(g1, 0, 0.0).matrix) == L0);
  CHECK(as_int(laplacian(g2, 0, 0.0).matrix) == L0);

  Eigen::MatrixXi L1a(4, 4), L1b(4, 4);
  L1a <<  2,  1, -1,  0,
          1,  2,  0, -1,
         -1,  0,  2,  1,
          0, -1,  1,  2;
  L1b <<  2,  1,  1,  0,
          1,  2,  0,  1,
          1,  0,  2,  1,
          0,  1,  1,  2;
  CHECK(as_int(laplacian(g1, 1, 0.0).matrix) == L1a);
  CHECK(as_int(laplacian(g2, 1, 0.0).matrix) == L1b);

  for (const auto* cx : {&g1, &g2})
    for (int k : {0, 1}) {
      const auto rec = spectra(laplacian(*cx, k, 0.0));
      testutil::check_spectrum(rec.eigenvalues, {0, 2, 2, 4});
      CHECK(rec.betti == 1);
    }
}

TEST_CASE("an eigenvector can separate digraphs with equal spectra") {
  const auto g1 = build_complex(testutil::load_flag("square_g1.flag"), 2);
  const auto g2 = build_complex(testutil::load_flag("square_g2.flag"), 2);
  Eigen::Vector4d v(0.5, -0.5, 0.5, -0.5);
  CHECK(eigenvector_check(laplacian(g1, 1, 0.0), v, 0.0));
  CHECK(eigenvector_check(laplacian(g2, 1, 0.0), v, 2.0));
  CHECK(!eigenvector_check(laplacian(g2, 1, 0.0), v, 0.0));
}

TEST_CASE("eigenvector_check validates its arguments") {
  Eigen::MatrixXd L = Eigen::MatrixXd::Identity(3, 3);
  CHECK_THROWS_AS(eigenvector_check(L, Eigen::Vector2d(1, 0), 1.0),
                  ValidationError);
  CHECK_THROWS_AS(eigenvector_check(L, Eigen::Vector3d::Zero().eval(), 1.0),
                  ValidationError);
  CHECK_THROWS_AS(
      eigenvector_check(Eigen::MatrixXd::Zero(2, 3), Eigen::Vector3d(1, 0, 0),
                        0.0),
      ValidationError);
}

TEST_CASE("isolated vertices: zero Laplacian, no positive eigenvalue") {
  const auto cx = build_complex(make_digraph({0.0, 0.0}, {}), 1);
  const auto rec = spectra(laplacian(cx, 0, 0.0));
  CHECK(rec.betti == 2);
  CHECK(!rec.lambda_min_nonzero.has_value());
  CHECK(rec.eigenvalues == Eigen::VectorXd::Zero(2));
}

TEST_CASE("empty sublevel complex yields an empty spectrum") {
  const auto cx = build_complex(testutil::load_flag("merging_components.flag"), 2);
  const auto rec = spectra(laplacian(cx, 0, -1.0));
  CHECK(rec.eigenvalues.size() == 0);
  CHECK(rec.betti == 0);
  CHECK(!rec.lambda_min_nonzero.has_value());
}

TEST_CASE("explicit zero tolerance overrides the automatic one") {
  const auto cx = build_complex(testutil::load_flag("g3.flag"), 2);
  const auto loose = spectra(laplacian(cx, 0, 0.0), {.zero_tol = 10.0});
  CHECK(loose.betti == 5);
  const auto tight = spectra(laplacian(cx, 0, 0.0), {.zero_tol = 1e-12});
  CHECK(tight.betti == 1);
}

TEST_CASE("eigenvectors are returned on request and satisfy the residual") {
  const auto cx = build_complex(testutil::load_flag("g3.flag"), 2);
  const auto L = laplacian(cx, 1, 0.0);
  const auto rec = spectra(L, {.want_eigenvectors = true});
  REQUIRE(rec.eigenvectors.has_value());
  for (Eigen::Index i = 0; i < rec.eigenvalues.size(); ++i)
    CHECK(eigenvector_check(L, rec.eigenvectors->col(i), rec.eigenvalues[i],
                            1e-8));
}

TEST_CASE("size cap raises a capacity error") {
  const auto cx = build_complex(testutil::load_flag("g3.flag"), 2);
  CHECK_THROWS_AS(laplacian(cx, 1, 0.0, 3), CapacityError);
}

TEST_SUITE_END();
