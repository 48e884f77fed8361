#pragma once

#include <stdexcept>

#include <Eigen/Core>

#include "ucinv/matrix_core.hpp"
#include "ucinv/scaling.hpp"
#include "ucinv/types.hpp"

namespace ucinv::inverses {

/// Left unit-consistent generalized inverse,
/// linv(A) = pinv(D_L * A) * D_L with D_L from left_scale. Satisfies
/// A * linv(A) * A = A, linv(A) * A * linv(A) = linv(A), rank equality,
/// and linv(D * A) = linv(A) * D^{-1} for nonsingular diagonal D.
template <ScalarLike Scalar>
DenseMatrix<Scalar> linv(const DenseMatrix<Scalar>& a,
                         const ToleranceConfig& cfg = {}) {
  const RealVector d = scaling::left_scale(a);
  const auto diag = d.template cast<Scalar>().asDiagonal();
  return pinv<Scalar>(diag * a, cfg) * diag;
}

/// Right unit-consistent generalized inverse, the conjugate-transpose dual
/// of linv. Satisfies rinv(A * D) = D^{-1} * rinv(A).
template <ScalarLike Scalar>
DenseMatrix<Scalar> rinv(const DenseMatrix<Scalar>& a,
                         const ToleranceConfig& cfg = {}) {
  return linv<Scalar>(a.adjoint(), cfg).adjoint();
}

/// Assembles the unit-consistent inverse from a general scaling of A:
/// diag(dr) * pinv(scaled) * diag(dl), evaluated in Hadamard form as
/// pinv(scaled) .* (dr * dl^T). The result does not depend on which member
/// of the scaling family (dl, dr) produced the balanced matrix.
template <ScalarLike Scalar>
DenseMatrix<Scalar> ginv_from_scaling(const scaling::GeneralScaling<Scalar>& gs,
                                      const ToleranceConfig& cfg = {}) {
  const DenseMatrix<Scalar> p = pinv<Scalar>(gs.scaled, cfg);
  const RealMatrix weights = gs.dr * gs.dl.transpose();
  return (p.array() * weights.template cast<Scalar>().array()).matrix();
}

/// General unit-consistent generalized inverse,
/// ginv(A) = diag(dr) * pinv(diag(dl) * A * diag(dr)) * diag(dl) with
/// (dl, dr) from dscale. Satisfies A * G * A = A, G * A * G = G,
/// rank[G] = rank[A], and ginv(D * A * E) = E^{-1} * G * D^{-1} for all
/// nonsingular diagonals D, E. The zero matrix maps to the zero matrix.
template <ScalarLike Scalar>
DenseMatrix<Scalar> ginv(const DenseMatrix<Scalar>& a,
                         const ToleranceConfig& cfg = {}) {
  detail::require_finite(a, "ginv");
  if ((a.array().abs() == 0.0).all())
    return DenseMatrix<Scalar>::Zero(a.cols(), a.rows());
  return ginv_from_scaling(scaling::dscale(a, cfg), cfg);
}

/// Splits a square operand into a top-left block of m_top variables with
/// incommensurate units and a bottom-right block of n_bottom variables in
/// a common Euclidean space.
struct BlockPartition {
  Index m_top = 0;
  Index n_bottom = 0;
};

/// Generalized inverse of a square matrix that is consistent under block
/// transforms T = blockdiag(D, R) with D nonsingular diagonal and R
/// orthonormal. In terms of the blocks [[W, X], [Y, Z]] selected by `part`:
///
///   [  ginv(W - X pinv(Z) Y)            -ginv(W) X pinv(Z - Y ginv(W) X) ]
///   [ -pinv(Z) Y ginv(W - X pinv(Z) Y)   pinv(Z - Y ginv(W) X)           ]
///
/// For nonsingular input with nonsingular Schur complements this coincides
/// with the exact partitioned inverse.
template <ScalarLike Scalar>
DenseMatrix<Scalar> mixed_block_inverse(const DenseMatrix<Scalar>& a,
                                        const BlockPartition& part,
                                        const ToleranceConfig& cfg = {}) {
  detail::require_finite(a, "mixed_block_inverse");
  if (a.rows() != a.cols())
    throw std::invalid_argument("mixed_block_inverse: matrix must be square");
  if (part.m_top < 1 || part.n_bottom < 1 ||
      part.m_top + part.n_bottom != a.rows())
    throw std::invalid_argument(
        "mixed_block_inverse: partition does not match matrix dimensions");

  const Index k = part.m_top;
  const Index nb = part.n_bottom;
  const DenseMatrix<Scalar> w = a.topLeftCorner(k, k);
  const DenseMatrix<Scalar> x = a.topRightCorner(k, nb);
  const DenseMatrix<Scalar> y = a.bottomLeftCorner(nb, k);
  const DenseMatrix<Scalar> z = a.bottomRightCorner(nb, nb);

  const DenseMatrix<Scalar> ginv_w = ginv(w, cfg);
  const DenseMatrix<Scalar> pinv_z = pinv(z, cfg);
  const DenseMatrix<Scalar> schur_w = w - x * pinv_z * y;
  const DenseMatrix<Scalar> schur_z = z - y * ginv_w * x;
  const DenseMatrix<Scalar> ginv_schur_w = ginv(schur_w, cfg);
  const DenseMatrix<Scalar> pinv_schur_z = pinv(schur_z, cfg);

  DenseMatrix<Scalar> out(a.rows(), a.cols());
  out.topLeftCorner(k, k) = ginv_schur_w;
  out.topRightCorner(k, nb) = -ginv_w * x * pinv_schur_z;
  out.bottomLeftCorner(nb, k) = -pinv_z * y * ginv_schur_w;
  out.bottomRightCorner(nb, nb) = pinv_schur_z;
  return out;
}

}  // namespace ucinv::inverses
