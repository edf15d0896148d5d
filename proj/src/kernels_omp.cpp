#include <omp.h>

#include <algorithm>
#include <vector>

#include "rankfit/kernels.hpp"

namespace rankfit::kernels::omp {

namespace {

std::size_t block_count(std::size_t n) { return (n + kBlockSize - 1) / kBlockSize; }

// Reduces block(b) for each block, then adds the partials in block order.
template <class BlockFn>
double blocked_reduce(std::size_t n, BlockFn&& block) {
  const std::size_t blocks = block_count(n);
  if (blocks <= 1) return n == 0 ? 0.0 : block(0, n);

  std::vector<double> partial(blocks);
  const auto nb = static_cast<long long>(blocks);
#pragma omp parallel for schedule(static)
  for (long long b = 0; b < nb; ++b) {
    const std::size_t lo = static_cast<std::size_t>(b) * kBlockSize;
    const std::size_t hi = std::min(n, lo + kBlockSize);
    partial[static_cast<std::size_t>(b)] = block(lo, hi);
  }
  double acc = 0.0;
  for (double p : partial) acc += p;
  return acc;
}

}  // namespace

double sum(std::span<const double> x) {
  return blocked_reduce(x.size(), [&](std::size_t lo, std::size_t hi) {
    double acc = 0.0;
    for (std::size_t i = lo; i < hi; ++i) acc += x[i];
    return acc;
  });
}

double dot(std::span<const double> x, std::span<const double> y) {
  return blocked_reduce(x.size(), [&](std::size_t lo, std::size_t hi) {
    double acc = 0.0;
    for (std::size_t i = lo; i < hi; ++i) acc += x[i] * y[i];
    return acc;
  });
}

MandelbrotProfile mandelbrot_profile(std::span<const double> log_values, double rho) {
  const std::size_t n = log_values.size();
  const double sxx = blocked_reduce(n, [&](std::size_t lo, std::size_t hi) {
    double acc = 0.0;
    for (std::size_t i = lo; i < hi; ++i) {
      const double x = mandelbrot_regressor(n, i + 1, rho);
      acc += x * x;
    }
    return acc;
  });
  const double sxy = blocked_reduce(n, [&](std::size_t lo, std::size_t hi) {
    double acc = 0.0;
    for (std::size_t i = lo; i < hi; ++i) acc += mandelbrot_regressor(n, i + 1, rho) * log_values[i];
    return acc;
  });

  MandelbrotProfile out;
  out.slope = sxx > 0.0 ? sxy / sxx : 0.0;
  out.sse = blocked_reduce(n, [&](std::size_t lo, std::size_t hi) {
    double acc = 0.0;
    for (std::size_t i = lo; i < hi; ++i) {
      const double e = log_values[i] - out.slope * mandelbrot_regressor(n, i + 1, rho);
      acc += e * e;
    }
    return acc;
  });
  return out;
}

}  // namespace rankfit::kernels::omp
