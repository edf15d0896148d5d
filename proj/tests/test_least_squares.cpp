#include <catch_amalgamated.hpp>

#include <random>

#include "rankfit/error.hpp"
#include "rankfit/least_squares.hpp"
#include "test_support.hpp"

using namespace rankfit;
using Catch::Matchers::WithinAbs;

TEST_CASE("fit_linear matches the long-double normal-equations oracle") {
  std::mt19937_64 g(3);
  std::normal_distribution<double> noise(0.0, 0.3);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t m = rankfit::testing::uniform_n(g, 4, 400);
    std::vector<double> x1(m), x2(m), y(m);
    for (std::size_t i = 0; i < m; ++i) {
      x1[i] = std::log(static_cast<double>(m - i));
      x2[i] = -std::log(static_cast<double>(i + 1));
      y[i] = 0.7 + 1.1 * x1[i] + 0.4 * x2[i] + noise(g);
    }
    const std::vector<std::vector<double>> cols{x1, x2};
    const LinearFit fit = fit_linear(cols, y);
    const auto oracle = rankfit::testing::normal_equations_ols(cols, y);
    CHECK_THAT(fit.intercept, WithinAbs(static_cast<double>(oracle[0]), 1e-9));
    CHECK_THAT(fit.coef[0], WithinAbs(static_cast<double>(oracle[1]), 1e-9));
    CHECK_THAT(fit.coef[1], WithinAbs(static_cast<double>(oracle[2]), 1e-9));
  }
}

TEST_CASE("fit_linear: degenerate designs") {
  const std::vector<double> y{1.0, 2.0, 3.0, 4.0};
  const std::vector<std::vector<double>> constant_col{{5.0, 5.0, 5.0, 5.0}};
  try {
    fit_linear(constant_col, y);
    FAIL("expected singular system");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::singular_system);
  }
  const std::vector<std::vector<double>> collinear{{1.0, 2.0, 3.0, 4.0}, {2.0, 4.0, 6.0, 8.0}};
  CHECK_THROWS_AS(fit_linear(collinear, y), Error);
  const std::vector<std::vector<double>> too_many{{1.0, 2.0}, {3.0, 1.0}};
  CHECK_THROWS_AS(fit_linear(too_many, std::vector<double>{1.0, 2.0}), Error);
}

TEST_CASE("solve_qr recovers an exact solution") {
  const std::vector<std::vector<double>> a{{1.0, 0.0, 1.0}, {0.0, 1.0, 1.0}};
  const auto c = solve_qr(a, {2.0, -3.0, -1.0});
  CHECK_THAT(c[0], WithinAbs(2.0, 1e-14));
  CHECK_THAT(c[1], WithinAbs(-3.0, 1e-14));
}
