#pragma once

#include <complex>
#include <concepts>
#include <stdexcept>
#include <string>

#include <Eigen/Core>

namespace ucinv {

template <class T>
concept ScalarLike =
    std::same_as<T, double> || std::same_as<T, std::complex<double>>;

template <ScalarLike Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <ScalarLike Scalar>
using DenseVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using RealMatrix = DenseMatrix<double>;
using ComplexMatrix = DenseMatrix<std::complex<double>>;
using RealVector = Eigen::VectorXd;
using ComplexVector = Eigen::VectorXcd;
using Index = Eigen::Index;

/// Numerical thresholds shared by all operations.
///
/// `rank_tol` is a relative singular-value cutoff: values below
/// rank_tol * sigma_max are treated as zero. A value of 0 selects the
/// standard automatic threshold max(m,n) * machine_epsilon.
/// `balance_tol` bounds the mean absolute log-adjustment per balancing
/// sweep; `max_iter` caps the number of sweeps.
struct ToleranceConfig {
  double rank_tol = 0.0;
  double balance_tol = 1e-12;
  int max_iter = 1000;
};

/// Thrown when a balancing iteration fails to reach balance_tol within
/// max_iter sweeps. Carries the last residual and the sweep count.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double residual, long iterations)
      : std::runtime_error(what), residual_(residual), iterations_(iterations) {}

  double residual() const noexcept { return residual_; }
  long iterations() const noexcept { return iterations_; }

 private:
  double residual_;
  long iterations_;
};

namespace detail {

template <ScalarLike Scalar>
void require_finite(const DenseMatrix<Scalar>& a, const char* who) {
  if (a.size() == 0)
    throw std::invalid_argument(std::string(who) + ": empty matrix");
  if (!a.allFinite())
    throw std::invalid_argument(std::string(who) + ": non-finite entry");
}

}  // namespace detail

}  // namespace ucinv
