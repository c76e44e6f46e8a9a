#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Jacobi>

namespace toughlab {

template <typename Scalar>
struct SymmetricEigen {
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

  /// Sorted descending.
  Vector eigenvalues;
  /// Column i pairs with eigenvalues(i).
  Matrix eigenvectors;
  int sweeps = 0;
  /// Off-diagonal Frobenius norm at exit.
  Scalar off_norm = Scalar(0);
  bool converged = false;
};

template <typename Derived>
typename Derived::Scalar off_diagonal_norm(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  Scalar sum(0);
  for (Eigen::Index j = 0; j < a.cols(); ++j)
    for (Eigen::Index i = 0; i < a.rows(); ++i)
      if (i != j) sum += a(i, j) * a(i, j);
  return std::sqrt(sum);
}

/// Cyclic Jacobi diagonalization of a real symmetric matrix. Pairs (p, q),
/// p < q, are visited row-major in every sweep; iteration stops once the
/// off-diagonal Frobenius norm drops below `tol` or `max_sweeps` is hit
/// (reported through `converged`).
template <typename Derived>
SymmetricEigen<typename Derived::Scalar> jacobi_eigen(const Eigen::MatrixBase<Derived>& input,
                                                     typename Derived::Scalar tol, int max_sweeps = 100) {
  using Scalar = typename Derived::Scalar;
  using Result = SymmetricEigen<Scalar>;
  eigen_assert(input.rows() == input.cols());

  const Eigen::Index n = input.rows();
  typename Result::Matrix a = input;
  typename Result::Matrix v = Result::Matrix::Identity(n, n);

  Result out;
  out.off_norm = off_diagonal_norm(a);
  while (out.off_norm >= tol && out.sweeps < max_sweeps) {
    for (Eigen::Index p = 0; p < n; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        if (a(p, q) == Scalar(0)) continue;
        Eigen::JacobiRotation<Scalar> rot;
        rot.makeJacobi(a, p, q);
        a.applyOnTheLeft(p, q, rot.adjoint());
        a.applyOnTheRight(p, q, rot);
        v.applyOnTheRight(p, q, rot);
        a(p, q) = Scalar(0);
        a(q, p) = Scalar(0);
      }
    }
    ++out.sweeps;
    out.off_norm = off_diagonal_norm(a);
  }
  out.converged = out.off_norm < tol;

  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(), [&](Eigen::Index i, Eigen::Index j) { return a(i, i) > a(j, j); });

  out.eigenvalues.resize(n);
  out.eigenvectors.resize(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    const auto src = order[static_cast<std::size_t>(k)];
    out.eigenvalues(k) = a(src, src);
    out.eigenvectors.col(k) = v.col(src);
  }
  return out;
}

/// Largest max-norm of A v_i - lambda_i v_i over all returned pairs.
template <typename Derived, typename Scalar>
Scalar eigen_residual(const Eigen::MatrixBase<Derived>& a, const SymmetricEigen<Scalar>& eig) {
  Scalar worst(0);
  for (Eigen::Index i = 0; i < eig.eigenvalues.size(); ++i) {
    const Scalar r = (a * eig.eigenvectors.col(i) - eig.eigenvalues(i) * eig.eigenvectors.col(i))
                         .template lpNorm<Eigen::Infinity>();
    worst = std::max(worst, r);
  }
  return worst;
}

}  // namespace toughlab
