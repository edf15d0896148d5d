#include <catch_amalgamated.hpp>

#include <omp.h>

#include <cmath>
#include <random>
#include <vector>

#include "rankfit/kernels.hpp"

using namespace rankfit;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

std::vector<double> random_vector(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 g(seed);
  std::normal_distribution<double> d(0.0, 1.0);
  std::vector<double> v(n);
  for (double& x : v) x = d(g);
  return v;
}

}  // namespace

TEST_CASE("omp kernels agree with the serial reference") {
  for (std::size_t n : {0u, 1u, 7u, 4096u, 4097u, 50000u, 200001u}) {
    const auto x = random_vector(n, n + 1);
    const auto y = random_vector(n, n + 2);
    const double scale = std::sqrt(static_cast<double>(n) + 1.0);
    CHECK_THAT(kernels::omp::sum(x), WithinAbs(kernels::serial::sum(x), 1e-12 * scale));
    CHECK_THAT(kernels::omp::dot(x, y), WithinAbs(kernels::serial::dot(x, y), 1e-12 * scale));
    if (n <= kernels::kBlockSize) {
      CHECK(kernels::omp::sum(x) == kernels::serial::sum(x));
      CHECK(kernels::omp::dot(x, y) == kernels::serial::dot(x, y));
    }
  }
}

TEST_CASE("mandelbrot profile: omp matches serial") {
  for (std::size_t n : {3u, 100u, 4096u, 30000u}) {
    std::vector<double> logs(n);
    for (std::size_t r = 1; r <= n; ++r) logs[r - 1] = 1.3 * std::log((n + 2.0) / (r + 2.0));
    for (double rho : {-0.99, 0.0, 2.0, 1000.0}) {
      const auto s = kernels::serial::mandelbrot_profile(logs, rho);
      const auto p = kernels::omp::mandelbrot_profile(logs, rho);
      CHECK_THAT(p.slope, WithinRel(s.slope, 1e-12));
      CHECK_THAT(p.sse, WithinAbs(s.sse, 1e-12 * (1.0 + s.sse)));
    }
    // Exact data: the profile at the generating rho has zero error.
    const auto at_truth = kernels::omp::mandelbrot_profile(logs, 2.0);
    CHECK_THAT(at_truth.slope, WithinRel(1.3, 1e-12));
    CHECK(at_truth.sse < 1e-20);
  }
}

TEST_CASE("omp reductions do not depend on the thread count") {
  const auto x = random_vector(123457, 99);
  const int saved = omp_get_max_threads();
  omp_set_num_threads(1);
  const double one = kernels::omp::sum(x);
  omp_set_num_threads(4);
  const double four = kernels::omp::sum(x);
  omp_set_num_threads(saved);
  CHECK(one == four);
}

TEST_CASE("shifted mean is exact on constant input") {
  const std::vector<double> c(37, 0.1);
  CHECK(kernels::shifted_mean(c) == 0.1);
  const std::vector<double> v{1.0, 2.0, 3.0, 4.0};
  CHECK(kernels::shifted_mean(v) == 2.5);
}
