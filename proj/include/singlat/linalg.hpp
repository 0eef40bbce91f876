#pragma once

// Exact dense linear algebra over Integer and Rational Eigen matrices.

#include "singlat/errors.hpp"
#include "singlat/exact.hpp"

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

namespace singlat {

/// Leading principal minors of a square integer matrix, computed by
/// fraction-free (Bareiss) elimination without pivoting. Stops after the
/// first zero minor, since elimination cannot continue past it.
template <typename Derived>
std::vector<Integer> leading_principal_minors(const Eigen::MatrixBase<Derived>& input) {
  IntMatrix a = input.template cast<Integer>();
  const Eigen::Index n = a.rows();
  std::vector<Integer> minors;
  minors.reserve(static_cast<std::size_t>(n));
  Integer previous = 1;
  for (Eigen::Index k = 0; k < n; ++k) {
    minors.push_back(a(k, k));
    if (a(k, k) == 0) break;
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j)
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / previous;
    }
    previous = a(k, k);
  }
  return minors;
}

/// Sylvester's criterion with exact integers.
template <typename Derived>
bool is_positive_definite(const Eigen::MatrixBase<Derived>& a) {
  if (a.rows() != a.cols()) return false;
  const auto minors = leading_principal_minors(a);
  if (static_cast<Eigen::Index>(minors.size()) != a.rows()) return false;
  return std::all_of(minors.begin(), minors.end(), [](const Integer& m) { return m > 0; });
}

/// Determinant of a square integer matrix (Bareiss with row pivoting).
template <typename Derived>
Integer determinant(const Eigen::MatrixBase<Derived>& input) {
  IntMatrix a = input.template cast<Integer>();
  const Eigen::Index n = a.rows();
  if (n == 0) return 1;
  Integer previous = 1;
  int sign = 1;
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      Eigen::Index swap_row = k + 1;
      while (swap_row < n && a(swap_row, k) == 0) ++swap_row;
      if (swap_row == n) return 0;
      a.row(k).swap(a.row(swap_row));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j)
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / previous;
    }
    previous = a(k, k);
  }
  return sign < 0 ? Integer(-a(n - 1, n - 1)) : a(n - 1, n - 1);
}

/// Exact inverse by Gauss-Jordan elimination; std::nullopt when singular.
template <typename Derived>
std::optional<RatMatrix> inverse(const Eigen::MatrixBase<Derived>& input) {
  RatMatrix a = input.template cast<Rational>();
  const Eigen::Index n = a.rows();
  RatMatrix inv = RatMatrix::Identity(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    Eigen::Index pivot = k;
    while (pivot < n && a(pivot, k) == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    if (pivot != k) {
      a.row(k).swap(a.row(pivot));
      inv.row(k).swap(inv.row(pivot));
    }
    const Rational p = a(k, k);
    a.row(k) /= p;
    inv.row(k) /= p;
    for (Eigen::Index i = 0; i < n; ++i) {
      if (i == k || a(i, k) == 0) continue;
      const Rational f = a(i, k);
      a.row(i) -= f * a.row(k);
      inv.row(i) -= f * inv.row(k);
    }
  }
  return inv;
}

/// left * A * right = diag(diagonal), with left/right unimodular and the
/// diagonal nonnegative and forming a divisibility chain d_1 | d_2 | ...
struct SmithForm {
  IntMatrix left;
  IntMatrix left_inverse;
  IntMatrix right;
  IntVector diagonal;
};

/// Smith normal form of a square integer matrix.
SmithForm smith_normal_form(const IntMatrix& a);

}  // namespace singlat
