#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

#include <Eigen/Core>

#include "ucinv/types.hpp"

namespace ucinv::scaling {

/// A positive diagonal scaling pair (dl, dr) together with the balanced
/// matrix it produces, scaled = diag(dl) * A * diag(dr). For every row and
/// column of `scaled` with at least one nonzero entry, the product of the
/// magnitudes of its nonzero entries is 1 (within balance tolerance).
/// The balanced matrix is unique even when (dl, dr) are not.
template <ScalarLike Scalar>
struct GeneralScaling {
  RealVector dl;               // length m, strictly positive
  RealVector dr;               // length n, strictly positive
  DenseMatrix<Scalar> scaled;  // m x n
  long iterations = 0;         // sweeps used (0 for the closed form)
};

/// Selectable vector-size measure driving the generalized balancing
/// iteration. All variants are homogeneous, permutation-invariant, and
/// equal to 1 on nonzero binary vectors.
struct SizeFunction {
  enum class Kind { GeometricMean, PNorm, RatioAB };

  Kind kind = Kind::GeometricMean;
  double p = 1.0;
  double a = 1.0;
  double b = 1.0;

  static SizeFunction geometric_mean() { return {}; }

  static SizeFunction p_norm(double p) {
    if (!(p > 0.0)) throw std::invalid_argument("SizeFunction: p must be > 0");
    return {Kind::PNorm, p, 1.0, 1.0};
  }

  static SizeFunction ratio(double a, double b) {
    if (!(a > 0.0) || !(b > 0.0))
      throw std::invalid_argument("SizeFunction: a and b must be > 0");
    return {Kind::RatioAB, 1.0, a, b};
  }
};

/// Size of a vector under the chosen measure; 0 for the zero vector.
///
///   GeometricMean: (prod_{k in S} |u_k|)^(1/|S|)   over the support S
///   PNorm(p):      ||u||_p / |S|^(1/p)
///   RatioAB(a,b):  (sum |u_i|^(a+b) / sum |u_i|^a)^(1/b)
template <ScalarLike Scalar>
double size_of(const DenseVector<Scalar>& u, const SizeFunction& f) {
  if (!u.allFinite()) throw std::invalid_argument("size_of: non-finite entry");
  const Eigen::ArrayXd mag = u.array().abs();
  const Index support = (mag > 0.0).count();
  if (support == 0) return 0.0;
  switch (f.kind) {
    case SizeFunction::Kind::GeometricMean: {
      double log_sum = 0.0;
      for (Index i = 0; i < mag.size(); ++i)
        if (mag(i) > 0.0) log_sum += std::log(mag(i));
      return std::exp(log_sum / static_cast<double>(support));
    }
    case SizeFunction::Kind::PNorm: {
      const double norm_p = std::pow(mag.pow(f.p).sum(), 1.0 / f.p);
      return norm_p / std::pow(static_cast<double>(support), 1.0 / f.p);
    }
    case SizeFunction::Kind::RatioAB: {
      const double num = mag.pow(f.a + f.b).sum();
      const double den = mag.pow(f.a).sum();
      return std::pow(num / den, 1.0 / f.b);
    }
  }
  return 0.0;  // unreachable
}

/// Left diagonal scale function: D(i,i) = 1 / ||A(i,:)||_2 for nonzero rows
/// and 1 for all-zero rows. The product D * A is invariant under positive
/// left-diagonal scalings of A, consistent under row permutations, and
/// invariant under left diagonal-unitary and right unitary factors.
template <ScalarLike Scalar>
RealVector left_scale(const DenseMatrix<Scalar>& a) {
  detail::require_finite(a, "left_scale");
  RealVector d(a.rows());
  for (Index i = 0; i < a.rows(); ++i) {
    const double norm = a.row(i).norm();
    d(i) = norm > 0.0 ? 1.0 / norm : 1.0;
  }
  return d;
}

/// Closed-form general scaling for elemental-nonzero matrices. Solves the
/// log-domain balance equations exactly via the rank-1 expansion
///
///   u = (1/n) * (J_m/2 - I) * L * 1,   v = 1^T * L * (J_n/2 - I) / m
///
/// with L = log|A| and J uniform averaging matrices, giving dl = exp(u),
/// dr = exp(v).
template <ScalarLike Scalar>
GeneralScaling<Scalar> closed_form_general_scale(const DenseMatrix<Scalar>& a) {
  detail::require_finite(a, "closed_form_general_scale");
  if ((a.array().abs() == 0.0).any())
    throw std::invalid_argument(
        "closed_form_general_scale: zero entry present; use dscale for "
        "matrices with zeros");
  const Index m = a.rows(), n = a.cols();
  const Eigen::ArrayXXd log_mag = a.array().abs().log();
  const double total = log_mag.sum();
  const Eigen::ArrayXd row_sum = log_mag.rowwise().sum();
  const Eigen::ArrayXd col_sum = log_mag.colwise().sum().transpose();

  const Eigen::ArrayXd u =
      (0.5 * total / static_cast<double>(m) - row_sum) / static_cast<double>(n);
  const Eigen::ArrayXd v =
      (0.5 * total / static_cast<double>(n) - col_sum) / static_cast<double>(m);

  GeneralScaling<Scalar> out;
  out.dl = u.exp().matrix();
  out.dr = v.exp().matrix();
  out.scaled = out.dl.template cast<Scalar>().asDiagonal() * a *
               out.dr.template cast<Scalar>().asDiagonal();
  out.iterations = 0;
  return out;
}

/// General scaling of an arbitrary nonzero matrix by alternating log-domain
/// row/column mean subtraction over the support mask. Entirely zero rows
/// and columns receive scale 1. Scalings are computed from |A| only; the
/// unitary parts of the entries are reattached at the end, so
/// scaled = phase(A) .* exp(L).
///
/// Convergence: mean |column adjustment| + mean |row adjustment| per sweep
/// falls below cfg.balance_tol; more than cfg.max_iter sweeps throws
/// ConvergenceError carrying the last residual.
template <ScalarLike Scalar>
GeneralScaling<Scalar> dscale(const DenseMatrix<Scalar>& a,
                              const ToleranceConfig& cfg = {}) {
  detail::require_finite(a, "dscale");
  const Index m = a.rows(), n = a.cols();

  Eigen::ArrayXXd log_mag = Eigen::ArrayXXd::Zero(m, n);
  Eigen::ArrayXX<bool> support(m, n);
  DenseMatrix<Scalar> phase = DenseMatrix<Scalar>::Zero(m, n);
  Index nonzero_count = 0;
  for (Index i = 0; i < m; ++i) {
    for (Index j = 0; j < n; ++j) {
      const double mag = std::abs(a(i, j));
      support(i, j) = mag > 0.0;
      if (mag > 0.0) {
        log_mag(i, j) = std::log(mag);
        phase(i, j) = a(i, j) / mag;
        ++nonzero_count;
      }
    }
  }
  if (nonzero_count == 0)
    throw std::invalid_argument("dscale: zero matrix cannot be balanced");

  Eigen::ArrayXi row_count(m), col_count(n);
  for (Index i = 0; i < m; ++i)
    row_count(i) = static_cast<int>(support.row(i).count());
  for (Index j = 0; j < n; ++j)
    col_count(j) = static_cast<int>(support.col(j).count());
  const double nonzero_rows = (row_count > 0).count();
  const double nonzero_cols = (col_count > 0).count();

  RealVector u = RealVector::Zero(m);
  RealVector v = RealVector::Zero(n);
  double dx = 2.0 * cfg.balance_tol;
  long sweeps = 0;
  while (dx > cfg.balance_tol) {
    if (sweeps >= cfg.max_iter)
      throw ConvergenceError(
          "dscale: no convergence after " + std::to_string(sweeps) +
              " sweeps (dx=" + std::to_string(dx) + ")",
          dx, sweeps);
    double col_adjust = 0.0;
    for (Index j = 0; j < n; ++j) {
      if (col_count(j) == 0) continue;
      double mean = 0.0;
      for (Index i = 0; i < m; ++i)
        if (support(i, j)) mean += log_mag(i, j);
      mean /= col_count(j);
      for (Index i = 0; i < m; ++i)
        if (support(i, j)) log_mag(i, j) -= mean;
      v(j) -= mean;
      col_adjust += std::abs(mean);
    }
    dx = col_adjust / nonzero_cols;
    double row_adjust = 0.0;
    for (Index i = 0; i < m; ++i) {
      if (row_count(i) == 0) continue;
      double mean = 0.0;
      for (Index j = 0; j < n; ++j)
        if (support(i, j)) mean += log_mag(i, j);
      mean /= row_count(i);
      for (Index j = 0; j < n; ++j)
        if (support(i, j)) log_mag(i, j) -= mean;
      u(i) -= mean;
      row_adjust += std::abs(mean);
    }
    dx += row_adjust / nonzero_rows;
    ++sweeps;
  }

  GeneralScaling<Scalar> out;
  out.dl = u.array().exp().matrix();
  out.dr = v.array().exp().matrix();
  out.scaled = DenseMatrix<Scalar>::Zero(m, n);
  for (Index i = 0; i < m; ++i)
    for (Index j = 0; j < n; ++j)
      if (support(i, j))
        out.scaled(i, j) = phase(i, j) * std::exp(log_mag(i, j));
  out.iterations = sweeps;
  return out;
}

/// Sinkhorn-type balancing: alternately divides each nonzero row, then each
/// nonzero column, by its size under `f`, until the mean absolute
/// log-adjustment per sweep falls below cfg.balance_tol. With the
/// geometric-mean size function the result agrees with dscale. Under PNorm
/// and RatioAB some supports have no finite fixed point, which surfaces as
/// ConvergenceError.
template <ScalarLike Scalar>
GeneralScaling<Scalar> sinkhorn_scale(const DenseMatrix<Scalar>& a,
                                      const SizeFunction& f,
                                      const ToleranceConfig& cfg = {}) {
  detail::require_finite(a, "sinkhorn_scale");
  const Index m = a.rows(), n = a.cols();
  Eigen::ArrayXXd mag = a.array().abs();
  if ((mag > 0.0).count() == 0)
    throw std::invalid_argument("sinkhorn_scale: zero matrix cannot be balanced");

  DenseMatrix<Scalar> phase = DenseMatrix<Scalar>::Zero(m, n);
  for (Index i = 0; i < m; ++i)
    for (Index j = 0; j < n; ++j)
      if (mag(i, j) > 0.0) phase(i, j) = a(i, j) / mag(i, j);

  RealVector dl = RealVector::Ones(m);
  RealVector dr = RealVector::Ones(n);
  long sweeps = 0;
  double dx = 2.0 * cfg.balance_tol;
  while (dx > cfg.balance_tol) {
    if (sweeps >= cfg.max_iter)
      throw ConvergenceError(
          "sinkhorn_scale: no convergence after " + std::to_string(sweeps) +
              " sweeps (dx=" + std::to_string(dx) + ")",
          dx, sweeps);
    double row_adjust = 0.0;
    Index rows_hit = 0;
    for (Index i = 0; i < m; ++i) {
      const double s = size_of<double>(mag.row(i).transpose().matrix(), f);
      if (s <= 0.0) continue;
      mag.row(i) /= s;
      dl(i) /= s;
      row_adjust += std::abs(std::log(s));
      ++rows_hit;
    }
    dx = rows_hit > 0 ? row_adjust / static_cast<double>(rows_hit) : 0.0;
    double col_adjust = 0.0;
    Index cols_hit = 0;
    for (Index j = 0; j < n; ++j) {
      const double s = size_of<double>(mag.col(j).matrix(), f);
      if (s <= 0.0) continue;
      mag.col(j) /= s;
      dr(j) /= s;
      col_adjust += std::abs(std::log(s));
      ++cols_hit;
    }
    dx += cols_hit > 0 ? col_adjust / static_cast<double>(cols_hit) : 0.0;
    ++sweeps;
  }

  GeneralScaling<Scalar> out;
  out.dl = dl;
  out.dr = dr;
  out.scaled = (phase.array() * mag.template cast<Scalar>()).matrix();
  out.iterations = sweeps;
  return out;
}

}  // namespace ucinv::scaling
