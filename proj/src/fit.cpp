#include "rankfit/fit.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <string>

#include "rankfit/error.hpp"
#include "rankfit/golden_section.hpp"
#include "rankfit/kernels.hpp"
#include "rankfit/least_squares.hpp"

namespace rankfit {

namespace {

constexpr std::size_t kRhoGridPoints = 121;

std::vector<double> log_of(std::span<const double> values) {
  std::vector<double> out(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) out[i] = std::log(values[i]);
  return out;
}

void require_length(const RankedSeries& series, std::size_t minimum, Model model) {
  if (series.size() < minimum)
    throw Error(ErrorKind::insufficient_data, std::string(model_name(model)) + " fit needs n >= " +
                                                  std::to_string(minimum) + ", have " + std::to_string(series.size()));
}

double total_sum_of_squares(std::span<const double> logs) {
  const double mean = kernels::shifted_mean(logs);
  std::vector<double> dev(logs.begin(), logs.end());
  for (double& v : dev) v -= mean;
  return kernels::dot(dev, dev);
}

double r_squared_from(double sse, double sst) {
  if (sst == 0.0) return sse <= kPerfectFitSse ? 1.0 : 0.0;
  return 1.0 - sse / sst;
}

std::vector<double> log_residuals(std::span<const double> logs, const ModelParams& params) {
  std::vector<double> res(logs.size());
  for (std::size_t i = 0; i < logs.size(); ++i) res[i] = logs[i] - std::log(evaluate(params, i + 1));
  return res;
}

FitReport make_report(const RankedSeries& series, ModelParams params, std::vector<std::string> warnings = {}) {
  const std::vector<double> logs = log_of(series.values());
  FitReport rep;
  rep.model = model_of(params);
  rep.n = series.size();
  rep.residuals = log_residuals(logs, params);
  rep.log_sse = kernels::dot(rep.residuals, rep.residuals);
  rep.r_squared = r_squared_from(rep.log_sse, total_sum_of_squares(logs));
  rep.params = std::move(params);
  rep.warnings = std::move(warnings);
  return rep;
}

std::vector<double> log_rank_column(std::size_t n) {
  std::vector<double> x(n);
  for (std::size_t r = 1; r <= n; ++r) x[r - 1] = std::log(static_cast<double>(r));
  return x;
}

std::vector<double> log_tail_column(std::size_t n) {
  std::vector<double> x(n);
  for (std::size_t r = 1; r <= n; ++r) x[r - 1] = std::log(static_cast<double>(n + 1 - r));
  return x;
}

}  // namespace

const FitReport& ComparisonReport::report(Model model) const {
  for (const FitReport& r : reports)
    if (r.model == model) return r;
  throw Error(ErrorKind::domain, "comparison has no report for " + std::string(model_name(model)));
}

double r_squared_log(const RankedSeries& observed, const ModelParams& fitted) {
  if (const auto n = series_length(fitted); n && *n != observed.size())
    throw Error(ErrorKind::domain, "model length " + std::to_string(*n) + " differs from series length " +
                                       std::to_string(observed.size()));
  const std::vector<double> logs = log_of(observed.values());
  const std::vector<double> res = log_residuals(logs, fitted);
  return r_squared_from(kernels::dot(res, res), total_sum_of_squares(logs));
}

BetaLikeParams fit_beta_like_values(std::span<const double> values) {
  const std::size_t n = values.size();
  if (n < 4) throw Error(ErrorKind::insufficient_data, "beta-like fit needs n >= 4, have " + std::to_string(n));
  for (double v : values)
    if (!std::isfinite(v) || !(v > 0.0)) throw Error(ErrorKind::validation, "values must be finite and positive");

  std::vector<double> neg_log_rank = log_rank_column(n);
  for (double& v : neg_log_rank) v = -v;
  const std::vector<std::vector<double>> design{log_tail_column(n), std::move(neg_log_rank)};
  const LinearFit lf = fit_linear(design, log_of(values));
  return BetaLikeParams{std::exp(lf.intercept), lf.coef[1], lf.coef[0], n};
}

FitReport fit_beta_like(const RankedSeries& series) {
  require_length(series, 4, Model::beta_like);
  return make_report(series, fit_beta_like_values(series.values()));
}

FitReport fit_zipf(const RankedSeries& series) {
  require_length(series, 3, Model::zipf);
  std::vector<double> neg_log_rank = log_rank_column(series.size());
  for (double& v : neg_log_rank) v = -v;
  const std::vector<std::vector<double>> design{std::move(neg_log_rank)};
  const LinearFit lf = fit_linear(design, log_of(series.values()));
  return make_report(series, ZipfParams{std::exp(lf.intercept), lf.coef[0]});
}

FitReport fit_lavalette(const RankedSeries& series) {
  require_length(series, 3, Model::lavalette);
  const std::size_t n = series.size();
  std::vector<double> x = log_tail_column(n);
  const std::vector<double> log_rank = log_rank_column(n);
  for (std::size_t i = 0; i < n; ++i) x[i] -= log_rank[i];
  const std::vector<std::vector<double>> design{std::move(x)};
  const LinearFit lf = fit_linear(design, log_of(series.values()));
  return make_report(series, LavaletteParams{std::exp(lf.intercept), lf.coef[0], n});
}

FitReport fit_mandelbrot(const RankedSeries& series) {
  require_length(series, 3, Model::mandelbrot);
  const std::size_t n = series.size();
  const std::vector<double> logs = log_of(series.values());
  const double rho_hi = 10.0 * static_cast<double>(n);

  auto objective = [&](double rho) {
    const double sse = kernels::mandelbrot_profile(logs, rho).sse;
    return std::isfinite(sse) ? sse : std::numeric_limits<double>::infinity();
  };

  // Geometric grid on rho + 1 across the bracket, plus rho = 0.
  std::vector<double> grid;
  grid.reserve(kRhoGridPoints + 1);
  const double log_lo = std::log(kRhoLower + 1.0);
  const double log_hi = std::log(rho_hi + 1.0);
  for (std::size_t i = 0; i < kRhoGridPoints; ++i) {
    const double t = static_cast<double>(i) / static_cast<double>(kRhoGridPoints - 1);
    grid.push_back(std::exp(log_lo + t * (log_hi - log_lo)) - 1.0);
  }
  grid.front() = kRhoLower;
  grid.back() = rho_hi;
  grid.push_back(0.0);
  std::sort(grid.begin(), grid.end());

  std::vector<double> values(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) values[i] = objective(grid[i]);
  const auto best_it = std::min_element(values.begin(), values.end());
  if (!std::isfinite(*best_it))
    throw Error(ErrorKind::fit_failure, "mandelbrot: no finite objective anywhere in the rho bracket");

  const std::size_t i_best = static_cast<std::size_t>(best_it - values.begin());
  ScalarMinimum best{grid[i_best], *best_it, grid.size()};
  const double lo = grid[i_best == 0 ? 0 : i_best - 1];
  const double hi = grid[std::min(i_best + 1, grid.size() - 1)];
  const ScalarMinimum refined = golden_section_minimize(objective, lo, hi, kRhoTolerance);
  if (refined.fx < best.fx) best = refined;

  std::vector<std::string> warnings;
  if (best.x - kRhoLower <= 1e-6 || rho_hi - best.x <= 1e-6 * rho_hi)
    warnings.push_back("mandelbrot: rho optimum " + std::to_string(best.x) +
                       " lies on the edge of the search bracket (-0.99, " + std::to_string(rho_hi) + "]");

  const double slope = kernels::mandelbrot_profile(logs, best.x).slope;
  return make_report(series, MandelbrotParams{best.x + 0.0, slope - 1.0 + 0.0, n}, std::move(warnings));
}

FitReport fit_model(Model model, const RankedSeries& series) {
  switch (model) {
    case Model::zipf: return fit_zipf(series);
    case Model::mandelbrot: return fit_mandelbrot(series);
    case Model::lavalette: return fit_lavalette(series);
    case Model::beta_like: return fit_beta_like(series);
  }
  throw Error(ErrorKind::domain, "unknown model");
}

ComparisonReport compare_models(const RankedSeries& series) {
  if (series.size() < 4)
    throw Error(ErrorKind::insufficient_data,
                "model comparison needs n >= 4, have " + std::to_string(series.size()));

  ComparisonReport out;
  out.reports.reserve(kAllModels.size());
  for (Model m : kAllModels) {
    try {
      out.reports.push_back(fit_model(m, series));
    } catch (const Error& e) {
      throw Error(e.kind(), std::string(model_name(m)) + ": " + e.what());
    }
  }

  double max_r2 = -std::numeric_limits<double>::infinity();
  for (const FitReport& r : out.reports) max_r2 = std::max(max_r2, r.r_squared);
  for (const FitReport& r : out.reports) {
    if (r.r_squared >= max_r2 - kR2TieTolerance) {
      out.best_by_r2 = r.model;
      break;
    }
  }

  const double beta_sse = out.report(Model::beta_like).log_sse;
  out.nesting_ok = beta_sse <= out.report(Model::zipf).log_sse + kNestingTolerance &&
                   beta_sse <= out.report(Model::lavalette).log_sse + kNestingTolerance;
  return out;
}

std::vector<ComparisonReport> compare_many(std::span<const RankedSeries> series) {
  std::vector<ComparisonReport> out(series.size());
  std::vector<std::exception_ptr> errors(series.size());
  const auto count = static_cast<long long>(series.size());
#pragma omp parallel for schedule(dynamic)
  for (long long i = 0; i < count; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    try {
      out[idx] = compare_models(series[idx]);
    } catch (...) {
      errors[idx] = std::current_exception();
    }
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

std::vector<ComparisonReport> compare_many_serial(std::span<const RankedSeries> series) {
  std::vector<ComparisonReport> out;
  out.reserve(series.size());
  for (const RankedSeries& s : series) out.push_back(compare_models(s));
  return out;
}

}  // namespace rankfit
