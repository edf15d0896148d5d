#include <cmath>
#include <vector>

#include "rankfit/kernels.hpp"

namespace rankfit::kernels {

double mandelbrot_regressor(std::size_t n, std::size_t rank, double rho) {
  const double r = static_cast<double>(rank);
  return std::log1p((static_cast<double>(n) - r) / (r + rho));
}

double shifted_mean(std::span<const double> x) {
  if (x.empty()) return 0.0;
  const double origin = x.front();
  std::vector<double> shifted(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) shifted[i] = x[i] - origin;
  return origin + sum(shifted) / static_cast<double>(x.size());
}

namespace serial {

double sum(std::span<const double> x) {
  double acc = 0.0;
  for (double v : x) acc += v;
  return acc;
}

double dot(std::span<const double> x, std::span<const double> y) {
  double acc = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) acc += x[i] * y[i];
  return acc;
}

MandelbrotProfile mandelbrot_profile(std::span<const double> log_values, double rho) {
  const std::size_t n = log_values.size();
  double sxx = 0.0;
  double sxy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double x = mandelbrot_regressor(n, i + 1, rho);
    sxx += x * x;
    sxy += x * log_values[i];
  }
  MandelbrotProfile out;
  out.slope = sxx > 0.0 ? sxy / sxx : 0.0;
  double sse = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double e = log_values[i] - out.slope * mandelbrot_regressor(n, i + 1, rho);
    sse += e * e;
  }
  out.sse = sse;
  return out;
}

}  // namespace serial
}  // namespace rankfit::kernels
