#pragma once

#include <algorithm>
#include <complex>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "ucinv/types.hpp"

namespace ucinv::test {

using Rng = std::mt19937_64;

template <ScalarLike Scalar>
Scalar random_entry(Rng& rng) {
  std::normal_distribution<double> dist;
  if constexpr (std::is_same_v<Scalar, double>) {
    return dist(rng);
  } else {
    return {dist(rng), dist(rng)};
  }
}

template <ScalarLike Scalar>
DenseMatrix<Scalar> random_matrix(Rng& rng, Index m, Index n) {
  DenseMatrix<Scalar> a(m, n);
  for (Index i = 0; i < m; ++i)
    for (Index j = 0; j < n; ++j) a(i, j) = random_entry<Scalar>(rng);
  return a;
}

/// Random m x n matrix of exact rank r, built as a product of factors.
template <ScalarLike Scalar>
DenseMatrix<Scalar> random_rank_matrix(Rng& rng, Index m, Index n, Index r) {
  return random_matrix<Scalar>(rng, m, r) * random_matrix<Scalar>(rng, r, n);
}

/// Log-uniform magnitudes in [lo, hi].
inline RealVector random_positive_diag(Rng& rng, Index n, double lo = 1e-3,
                                       double hi = 1e3) {
  std::uniform_real_distribution<double> dist(std::log(lo), std::log(hi));
  RealVector d(n);
  for (Index i = 0; i < n; ++i) d(i) = std::exp(dist(rng));
  return d;
}

/// Nonsingular diagonal with log-uniform magnitudes and random sign (real)
/// or phase (complex).
template <ScalarLike Scalar>
DenseVector<Scalar> random_nonsingular_diag(Rng& rng, Index n,
                                            double lo = 1e-3,
                                            double hi = 1e3) {
  const RealVector mag = random_positive_diag(rng, n, lo, hi);
  DenseVector<Scalar> d(n);
  for (Index i = 0; i < n; ++i) {
    if constexpr (std::is_same_v<Scalar, double>) {
      d(i) = (rng() & 1) ? mag(i) : -mag(i);
    } else {
      std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
      const double theta = angle(rng);
      d(i) = std::polar(mag(i), theta);
    }
  }
  return d;
}

/// Diagonal of unit-magnitude entries (signs or phases).
template <ScalarLike Scalar>
DenseVector<Scalar> random_unitary_diag(Rng& rng, Index n) {
  DenseVector<Scalar> d(n);
  for (Index i = 0; i < n; ++i) {
    if constexpr (std::is_same_v<Scalar, double>) {
      d(i) = (rng() & 1) ? 1.0 : -1.0;
    } else {
      std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
      d(i) = std::polar(1.0, angle(rng));
    }
  }
  return d;
}

template <ScalarLike Scalar>
DenseMatrix<Scalar> random_orthonormal(Rng& rng, Index n) {
  const DenseMatrix<Scalar> a = random_matrix<Scalar>(rng, n, n);
  Eigen::HouseholderQR<DenseMatrix<Scalar>> qr(a);
  return qr.householderQ() * DenseMatrix<Scalar>::Identity(n, n);
}

inline Eigen::PermutationMatrix<Eigen::Dynamic> random_permutation(Rng& rng,
                                                                   Index n) {
  std::vector<int> idx(static_cast<size_t>(n));
  for (Index i = 0; i < n; ++i) idx[static_cast<size_t>(i)] = static_cast<int>(i);
  std::shuffle(idx.begin(), idx.end(), rng);
  Eigen::PermutationMatrix<Eigen::Dynamic> p(n);
  for (Index i = 0; i < n; ++i) p.indices()(i) = idx[static_cast<size_t>(i)];
  return p;
}

template <class MatA, class MatB>
double rel_err(const MatA& got, const MatB& want) {
  const double scale = want.norm();
  return scale > 0 ? (got - want).norm() / scale : (got - want).norm();
}

/// Multiset distance between complex spectra: greedy nearest-neighbour
/// matching, stable against order flips between near-equal values (e.g.
/// conjugate pairs whose real parts differ only by rounding).
inline double spectrum_distance(const ComplexVector& a,
                                const ComplexVector& b) {
  std::vector<bool> used(static_cast<size_t>(b.size()), false);
  double worst = 0.0;
  for (Index i = 0; i < a.size(); ++i) {
    Index best = -1;
    double best_dist = 0.0;
    for (Index j = 0; j < b.size(); ++j) {
      if (used[static_cast<size_t>(j)]) continue;
      const double dist = std::abs(a(i) - b(j));
      if (best < 0 || dist < best_dist) {
        best = j;
        best_dist = dist;
      }
    }
    used[static_cast<size_t>(best)] = true;
    worst = std::max(worst, best_dist);
  }
  return worst;
}

}  // namespace ucinv::test
