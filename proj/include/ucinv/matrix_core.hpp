#pragma once

#include <limits>
#include <stdexcept>

#include <Eigen/Dense>
#include <Eigen/SVD>

#include "ucinv/types.hpp"

namespace ucinv {

template <ScalarLike Scalar>
struct SvdResult {
  DenseMatrix<Scalar> u;        // m x m, unitary
  RealVector singular_values;   // min(m,n), descending
  DenseMatrix<Scalar> v;        // n x n, unitary
};

namespace detail {

/// Absolute cutoff below which singular values count as zero.
inline double rank_cutoff(const RealVector& s, Index rows, Index cols,
                          const ToleranceConfig& cfg) {
  if (s.size() == 0) return 0.0;
  const double rel = cfg.rank_tol > 0.0
                         ? cfg.rank_tol
                         : static_cast<double>(std::max(rows, cols)) *
                               std::numeric_limits<double>::epsilon();
  return rel * s(0);
}

template <ScalarLike Scalar>
Eigen::JacobiSVD<DenseMatrix<Scalar>> thin_svd(const DenseMatrix<Scalar>& a) {
  Eigen::JacobiSVD<DenseMatrix<Scalar>> svd(
      a, Eigen::ComputeThinU | Eigen::ComputeThinV);
  if (svd.info() != Eigen::Success)
    throw std::runtime_error("svd: decomposition did not converge");
  return svd;
}

}  // namespace detail

/// Full SVD, A = U * diag(s) * V^*.
template <ScalarLike Scalar>
SvdResult<Scalar> svd(const DenseMatrix<Scalar>& a) {
  detail::require_finite(a, "svd");
  Eigen::JacobiSVD<DenseMatrix<Scalar>> svd(
      a, Eigen::ComputeFullU | Eigen::ComputeFullV);
  if (svd.info() != Eigen::Success)
    throw std::runtime_error("svd: decomposition did not converge");
  return {svd.matrixU(), svd.singularValues(), svd.matrixV()};
}

/// Moore-Penrose pseudoinverse. Singular values below the rank cutoff are
/// treated as zero.
template <ScalarLike Scalar>
DenseMatrix<Scalar> pinv(const DenseMatrix<Scalar>& a,
                         const ToleranceConfig& cfg = {}) {
  detail::require_finite(a, "pinv");
  auto svd = detail::thin_svd(a);
  const RealVector& s = svd.singularValues();
  const double cutoff = detail::rank_cutoff(s, a.rows(), a.cols(), cfg);
  RealVector inv_s = RealVector::Zero(s.size());
  for (Index i = 0; i < s.size(); ++i)
    if (s(i) > cutoff) inv_s(i) = 1.0 / s(i);
  return svd.matrixV() * inv_s.template cast<Scalar>().asDiagonal() *
         svd.matrixU().adjoint();
}

/// Pseudoinverse of A = F * G from a rank factorization (F m x r of full
/// column rank, G r x n of full row rank):
///
///   pinv(A) = G^* (F^* A G^*)^{-1} F^*
///
/// The inner r x r matrix is inverted by full-pivot LU, so this route is
/// independent of the SVD-based pinv and serves as an oracle for it.
template <ScalarLike Scalar>
DenseMatrix<Scalar> pinv_rank_factorization(const DenseMatrix<Scalar>& f,
                                            const DenseMatrix<Scalar>& g,
                                            const ToleranceConfig& cfg = {}) {
  detail::require_finite(f, "pinv_rank_factorization");
  detail::require_finite(g, "pinv_rank_factorization");
  if (f.cols() != g.rows())
    throw std::invalid_argument(
        "pinv_rank_factorization: inner dimensions do not match");
  const DenseMatrix<Scalar> a = f * g;
  const DenseMatrix<Scalar> core = f.adjoint() * a * g.adjoint();
  Eigen::FullPivLU<DenseMatrix<Scalar>> lu(core);
  if (cfg.rank_tol > 0.0) lu.setThreshold(cfg.rank_tol);
  if (!lu.isInvertible())
    throw std::invalid_argument(
        "pinv_rank_factorization: F^* A G^* is singular; the inputs are not "
        "a valid rank factorization");
  return g.adjoint() * lu.inverse() * f.adjoint();
}

/// Numerical rank: number of singular values above the rank cutoff.
template <ScalarLike Scalar>
Index rank(const DenseMatrix<Scalar>& a, const ToleranceConfig& cfg = {}) {
  detail::require_finite(a, "rank");
  auto svd = detail::thin_svd(a);
  const RealVector& s = svd.singularValues();
  const double cutoff = detail::rank_cutoff(s, a.rows(), a.cols(), cfg);
  Index r = 0;
  for (Index i = 0; i < s.size(); ++i)
    if (s(i) > cutoff) ++r;
  return r;
}

}  // namespace ucinv
