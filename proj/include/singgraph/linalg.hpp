#pragma once

// Exact dense linear algebra over an ordered field scalar (Rat in practice).
// Everything here is division-exact: no pivoting by magnitude, only by
// non-vanishing.

#include <optional>
#include <vector>

#include <Eigen/Dense>
#include <boost/multiprecision/eigen.hpp>

namespace singgraph {

template <typename Scalar>
using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

/// Leading principal minors of `a`, computed by elimination without row
/// exchanges. Elimination stops at the first non-positive minor, which is the
/// last entry of the result.
template <typename Scalar>
std::vector<Scalar> leading_minors_until_nonpositive(Mat<Scalar> a) {
  const Eigen::Index n = a.rows();
  std::vector<Scalar> minors;
  Scalar running(1);
  for (Eigen::Index k = 0; k < n; ++k) {
    const Scalar pivot = a(k, k);
    running *= pivot;
    minors.push_back(running);
    if (!(pivot > 0)) break;
    for (Eigen::Index i = k + 1; i < n; ++i) {
      if (a(i, k) == 0) continue;
      const Scalar f = a(i, k) / pivot;
      for (Eigen::Index j = k; j < n; ++j) a(i, j) -= f * a(k, j);
    }
  }
  return minors;
}

/// Positive definiteness of a symmetric matrix via its leading principal
/// minors (Sylvester).
template <typename Scalar>
bool is_positive_definite(const Mat<Scalar>& a) {
  auto minors = leading_minors_until_nonpositive<Scalar>(a);
  return static_cast<Eigen::Index>(minors.size()) == a.rows() &&
         (minors.empty() || minors.back() > 0);
}

/// Gauss-Jordan on [a | b]. Returns nullopt when `a` is singular.
template <typename Scalar>
std::optional<Mat<Scalar>> solve_exact(Mat<Scalar> a, Mat<Scalar> b) {
  const Eigen::Index n = a.rows();
  if (a.cols() != n || b.rows() != n) return std::nullopt;
  for (Eigen::Index k = 0; k < n; ++k) {
    Eigen::Index p = k;
    while (p < n && a(p, k) == 0) ++p;
    if (p == n) return std::nullopt;
    if (p != k) {
      a.row(k).swap(a.row(p));
      b.row(k).swap(b.row(p));
    }
    const Scalar inv = Scalar(1) / a(k, k);
    for (Eigen::Index j = k; j < n; ++j) a(k, j) *= inv;
    for (Eigen::Index j = 0; j < b.cols(); ++j) b(k, j) *= inv;
    for (Eigen::Index i = 0; i < n; ++i) {
      if (i == k || a(i, k) == 0) continue;
      const Scalar f = a(i, k);
      for (Eigen::Index j = k; j < n; ++j) a(i, j) -= f * a(k, j);
      for (Eigen::Index j = 0; j < b.cols(); ++j) b(i, j) -= f * b(k, j);
    }
  }
  return b;
}

template <typename Scalar>
std::optional<Vec<Scalar>> solve_exact(const Mat<Scalar>& a,
                                       const Vec<Scalar>& b) {
  auto x = solve_exact<Scalar>(a, Mat<Scalar>(b));
  if (!x) return std::nullopt;
  return Vec<Scalar>(x->col(0));
}

template <typename Scalar>
std::optional<Mat<Scalar>> inverse_exact(const Mat<Scalar>& a) {
  return solve_exact<Scalar>(a, Mat<Scalar>(Mat<Scalar>::Identity(a.rows(), a.rows())));
}

}  // namespace singgraph
