#ifndef RANKFIT_LEAST_SQUARES_HPP
#define RANKFIT_LEAST_SQUARES_HPP

#include <span>
#include <vector>

namespace rankfit {

/// Ordinary least squares with intercept: y ~ intercept + sum_j coef[j] * x_j.
struct LinearFit {
  double intercept = 0.0;
  std::vector<double> coef;
};

/// Centers the regressors and response, solves the centered problem by
/// Householder QR, then recovers the intercept from the means.
/// Throws Error(singular_system) when a centered column is (numerically)
/// dependent on the earlier ones, Error(insufficient_data) when there are
/// fewer rows than coefficients plus one.
LinearFit fit_linear(std::span<const std::vector<double>> regressors, std::span<const double> response);

/// Householder QR least-squares solve of min ||A c - y|| for a tall,
/// column-major A (each inner vector is one column). No intercept.
std::vector<double> solve_qr(std::vector<std::vector<double>> columns, std::vector<double> rhs);

}  // namespace rankfit

#endif  // RANKFIT_LEAST_SQUARES_HPP
