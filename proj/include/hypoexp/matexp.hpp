#pragma once

#include <Eigen/Core>

namespace hypoexp {

/// Matrix exponential e^A by scaling and squaring: scale A by 2^{-s} until
/// its one-norm sits below the degree-13 Pade threshold, apply the diagonal
/// Pade approximant (degrees 3/5/7/9 directly when the norm is already
/// small), then square s times.
///
/// Throws Error(errc::non_square) / Error(errc::non_finite) on bad input.
Eigen::MatrixXd matrix_exponential(const Eigen::MatrixXd& a);

}  // namespace hypoexp
