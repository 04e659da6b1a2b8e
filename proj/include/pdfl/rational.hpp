#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <Eigen/Core>

namespace pdfl {

/// Exact rational scalar used wherever ranks and kernels must be computed
/// without rounding.
using Rational = boost::multiprecision::cpp_rational;

using RationalDenseMatrix =
    Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

}  // namespace pdfl
