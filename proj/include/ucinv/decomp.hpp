#pragma once

#include <stdexcept>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include "ucinv/inverses.hpp"
#include "ucinv/matrix_core.hpp"
#include "ucinv/scaling.hpp"
#include "ucinv/types.hpp"

namespace ucinv::decomp {

/// Five-factor unit-invariant SVD, A = D * U * diag(s) * V^* * E, where
/// U * diag(s) * V^* is the SVD of the balanced matrix and D, E invert the
/// balancing scalings. The values s are invariant under nonsingular
/// diagonal transformations of A; D, U, V, E individually are not unique.
template <ScalarLike Scalar>
struct UiSvdFactors {
  RealVector d;                // m, diagonal of D = inv(diag(dl))
  DenseMatrix<Scalar> u;       // m x m unitary
  RealVector singular_values;  // min(m,n), descending
  DenseMatrix<Scalar> v;       // n x n unitary
  RealVector e;                // n, diagonal of E = inv(diag(dr))
};

template <ScalarLike Scalar>
struct LeftUiSvdFactors {
  RealVector d;                // m, diagonal of D = inv(left_scale(A))
  DenseMatrix<Scalar> u;       // m x m unitary
  RealVector singular_values;  // min(m,n), descending
  DenseMatrix<Scalar> v;       // n x n unitary
};

template <ScalarLike Scalar>
UiSvdFactors<Scalar> ui_svd(const DenseMatrix<Scalar>& a,
                            const ToleranceConfig& cfg = {}) {
  const auto gs = scaling::dscale(a, cfg);
  auto factors = svd(gs.scaled);
  return {gs.dl.cwiseInverse(), std::move(factors.u),
          std::move(factors.singular_values), std::move(factors.v),
          gs.dr.cwiseInverse()};
}

/// Unit-invariant singular values: the singular values of the balanced
/// matrix, descending.
template <ScalarLike Scalar>
RealVector ui_singular_values(const DenseMatrix<Scalar>& a,
                              const ToleranceConfig& cfg = {}) {
  const auto gs = scaling::dscale(a, cfg);
  return detail::thin_svd(gs.scaled).singularValues();
}

/// Left UI-SVD: A = D * U * diag(s) * V^* with D inverting left_scale(A).
/// The values s are invariant under left nonsingular diagonal and right
/// unitary transformations of A.
template <ScalarLike Scalar>
LeftUiSvdFactors<Scalar> left_ui_svd(const DenseMatrix<Scalar>& a,
                                     const ToleranceConfig& cfg = {}) {
  (void)cfg;
  const RealVector d = scaling::left_scale(a);
  auto factors = svd<Scalar>(d.template cast<Scalar>().asDiagonal() * a);
  return {d.cwiseInverse(), std::move(factors.u),
          std::move(factors.singular_values), std::move(factors.v)};
}

/// Scale-invariant eigenvalues of a square matrix: the eigenvalues of the
/// balanced matrix, as an unordered multiset. Invariant under diagonal
/// transformations D * A * E with D * E nonnegative real.
template <ScalarLike Scalar>
ComplexVector si_eigenvalues(const DenseMatrix<Scalar>& a,
                             const ToleranceConfig& cfg = {}) {
  if (a.rows() != a.cols())
    throw std::invalid_argument("si_eigenvalues: matrix must be square");
  const auto gs = scaling::dscale(a, cfg);
  Eigen::ComplexEigenSolver<ComplexMatrix> solver(
      gs.scaled.template cast<std::complex<double>>(), false);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("si_eigenvalues: eigenvalue iteration failed");
  return solver.eigenvalues();
}

/// The k largest unit-invariant singular values, usable as a signature
/// that is robust to row/column amplitude variations.
template <ScalarLike Scalar>
RealVector ui_signature(const DenseMatrix<Scalar>& a, Index k,
                        const ToleranceConfig& cfg = {}) {
  detail::require_finite(a, "ui_signature");
  if (k < 1 || k > std::min(a.rows(), a.cols()))
    throw std::invalid_argument("ui_signature: k out of range");
  return ui_singular_values(a, cfg).head(k);
}

/// Row-major vectorization of A .* ginv(A)^T (plain transpose, no
/// conjugation). A more discriminating signature than the UI singular
/// values: invariant under A -> D * A * E for nonsingular diagonals but
/// not permutation-invariant.
template <ScalarLike Scalar>
DenseVector<Scalar> hadamard_signature(const DenseMatrix<Scalar>& a,
                                       const ToleranceConfig& cfg = {}) {
  const DenseMatrix<Scalar> g = inverses::ginv(a, cfg);
  const DenseMatrix<Scalar> h =
      (a.array() * g.transpose().array()).matrix();
  DenseVector<Scalar> vec(h.size());
  Index pos = 0;
  for (Index i = 0; i < h.rows(); ++i)
    for (Index j = 0; j < h.cols(); ++j) vec(pos++) = h(i, j);
  return vec;
}

}  // namespace ucinv::decomp
