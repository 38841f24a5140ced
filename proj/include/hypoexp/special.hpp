#pragma once

namespace hypoexp {

/// Lower incomplete gamma for integer order, gamma(n, x) = int_0^x t^{n-1} e^{-t} dt.
///
/// Evaluated through the Poisson-tail series summed from k = n upward, which
/// keeps relative accuracy (~1e-13) even for values near 1e-300 where the
/// textbook (n-1)!(1 - e^{-x} sum_{k<n} x^k/k!) form cancels to noise.
/// Throws Error(errc::invalid_order) for n < 1 and
/// Error(errc::non_finite_input) for invalid x.
double lower_incomplete_gamma(int n, double x);

/// Exponential-moment integral I(n, x) = int_0^x t^{n-1} e^t dt.
/// All-positive power series sum_j x^{n+j} / (j! (n+j)), compensated
/// summation; relative accuracy well under the 1e-10 contract.
double exp_moment_integral(int n, double x);

/// P(Erlang(n, rate) <= t), the regularized lower gamma P(n, rate*t),
/// computed rare-event-accurately (Poisson-tail series for rate*t < n,
/// complement otherwise). Result clamped to [0, 1].
double erlang_cdf(int n, double rate, double t);

/// Regularized lower incomplete gamma P(n, x) for integer n >= 1.
double regularized_gamma_p(int n, double x);

/// Stirling-type factorial bound n^{n+1/2} e^{-n+1} >= n!.
/// Returns +infinity beyond the representable range.
double stirling_upper_bound(int n);

}  // namespace hypoexp
