// Exact determinant and rank for Eigen matrices over an exact field scalar
// (no tolerances: a pivot is usable iff it compares unequal to zero).
#ifndef DIII_EXACT_LINALG_HPP
#define DIII_EXACT_LINALG_HPP

#include <Eigen/Core>
#include <stdexcept>
#include <utility>

namespace diii {

/// Fraction-free (Bareiss) elimination. Every division is exact in an
/// integral domain; over a field it just keeps entries small.
template <typename Derived>
typename Derived::Scalar exact_determinant(const Eigen::MatrixBase<Derived>& input) {
  using Scalar = typename Derived::Scalar;
  if (input.rows() != input.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> a = input;
  const Eigen::Index n = a.rows();
  if (n == 0) return Scalar(1);
  const Scalar zero(0);
  bool negate = false;
  Scalar prev(1);
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (a(k, k) == zero) {
      Eigen::Index p = k + 1;
      while (p < n && a(p, k) == zero) ++p;
      if (p == n) return zero;
      a.row(k).swap(a.row(p));
      negate = !negate;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) {
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      }
      a(i, k) = zero;
    }
    prev = a(k, k);
  }
  Scalar det = a(n - 1, n - 1);
  return negate ? Scalar(-det) : det;
}

/// Row reduction over a field.
template <typename Derived>
Eigen::Index exact_rank(const Eigen::MatrixBase<Derived>& input) {
  using Scalar = typename Derived::Scalar;
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> a = input;
  const Scalar zero(0);
  Eigen::Index rank = 0;
  for (Eigen::Index col = 0; col < a.cols() && rank < a.rows(); ++col) {
    Eigen::Index p = rank;
    while (p < a.rows() && a(p, col) == zero) ++p;
    if (p == a.rows()) continue;
    a.row(rank).swap(a.row(p));
    const Scalar pivot = a(rank, col);
    for (Eigen::Index i = rank + 1; i < a.rows(); ++i) {
      if (a(i, col) == zero) continue;
      const Scalar f = a(i, col) / pivot;
      for (Eigen::Index j = col; j < a.cols(); ++j) a(i, j) -= f * a(rank, j);
    }
    ++rank;
  }
  return rank;
}

}  // namespace diii

#endif  // DIII_EXACT_LINALG_HPP
