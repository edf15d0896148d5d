#ifndef RANKFIT_KERNELS_HPP
#define RANKFIT_KERNELS_HPP

#include <cstddef>
#include <span>

// Reduction kernels behind the log-space fits.
//
// `serial` is the plain left-to-right reference. `omp` splits the range into
// fixed blocks of kBlockSize, reduces each block left to right (in parallel
// when there is more than one block) and adds the block partials in index
// order, so its result does not depend on the thread count or schedule.
// For n <= kBlockSize both agree bit for bit.

namespace rankfit::kernels {

inline constexpr std::size_t kBlockSize = 4096;

/// Sums for the no-intercept regression of log values y on
/// x_r = log(n + rho) - log(r + rho), r = 1..n.
struct MandelbrotProfile {
  double slope = 0.0;  // sxy / sxx, i.e. 1 + epsilon
  double sse = 0.0;    // sum (y_r - slope * x_r)^2
};

namespace serial {
double sum(std::span<const double> x);
double dot(std::span<const double> x, std::span<const double> y);
MandelbrotProfile mandelbrot_profile(std::span<const double> log_values, double rho);
}  // namespace serial

namespace omp {
double sum(std::span<const double> x);
double dot(std::span<const double> x, std::span<const double> y);
MandelbrotProfile mandelbrot_profile(std::span<const double> log_values, double rho);
}  // namespace omp

// Library code calls these.
using omp::dot;
using omp::mandelbrot_profile;
using omp::sum;

/// Mean as y0 + sum(y - y0)/n, exact for constant input.
double shifted_mean(std::span<const double> x);

/// log1p((n - r) / (r + rho)), the Mandelbrot regressor at rank r.
double mandelbrot_regressor(std::size_t n, std::size_t rank, double rho);

}  // namespace rankfit::kernels

#endif  // RANKFIT_KERNELS_HPP
