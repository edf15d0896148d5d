#ifndef RANKFIT_FIT_HPP
#define RANKFIT_FIT_HPP

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "rankfit/models.hpp"
#include "rankfit/series.hpp"

// Least-squares fitting of the rank laws on log values, using natural logs
// throughout. Exponents are independent of the log base; K is recovered with exp().

namespace rankfit {

struct FitReport {
  Model model = Model::zipf;
  ModelParams params;
  double r_squared = 0.0;
  double log_sse = 0.0;
  std::vector<double> residuals;  // log observed - log fitted, by rank
  std::size_t n = 0;
  std::vector<std::string> warnings;
};

struct ComparisonReport {
  std::vector<FitReport> reports;  // catalog order
  Model best_by_r2 = Model::zipf;
  bool nesting_ok = false;

  const FitReport& report(Model model) const;
};

/// Tolerances fixed by the fitting contract.
inline constexpr double kNestingTolerance = 1e-9;
inline constexpr double kR2TieTolerance = 1e-12;
inline constexpr double kPerfectFitSse = 1e-20;
inline constexpr double kRhoLower = -0.99;
inline constexpr double kRhoTolerance = 1e-9;

/// 1 - SSE/SST on natural logs. For constant data (SST = 0) returns 1 when
/// SSE <= 1e-20, otherwise 0. Throws Error(domain) if the model length
/// differs from the series length (Zipf exempt).
double r_squared_log(const RankedSeries& observed, const ModelParams& fitted);

/// log K + b log(n + 1 - r) - a log r by OLS. Needs n >= 4.
FitReport fit_beta_like(const RankedSeries& series);
/// log K - alpha log r by OLS. Needs n >= 3.
FitReport fit_zipf(const RankedSeries& series);
/// log K + b log((n + 1 - r) / r) by OLS. Needs n >= 3.
FitReport fit_lavalette(const RankedSeries& series);
/// Profiled least squares: for each rho the exponent 1 + epsilon has a
/// closed form (no intercept), and rho is found by a log-spaced scan of
/// (-0.99, 10 n] refined with golden-section search. Needs n >= 3.
/// Adds a warning when the optimum sits on the edge of the bracket.
FitReport fit_mandelbrot(const RankedSeries& series);

FitReport fit_model(Model model, const RankedSeries& series);

/// Beta-like regression on positive values taken in rank order, without the
/// non-increasing requirement. Returns (k, a, b) for n = values.size().
BetaLikeParams fit_beta_like_values(std::span<const double> values);

/// All four fits, tie-broken best model and the nested-dominance verdict.
/// Needs n >= 4. Fitter errors are rethrown with the model name prefixed.
ComparisonReport compare_models(const RankedSeries& series);

/// compare_models over many series, in parallel across series.
std::vector<ComparisonReport> compare_many(std::span<const RankedSeries> series);
/// Serial reference for compare_many.
std::vector<ComparisonReport> compare_many_serial(std::span<const RankedSeries> series);

}  // namespace rankfit

#endif  // RANKFIT_FIT_HPP
