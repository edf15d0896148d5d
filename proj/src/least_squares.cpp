#include "rankfit/least_squares.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "rankfit/error.hpp"
#include "rankfit/kernels.hpp"

namespace rankfit {

namespace {

// Applies I - 2 v v^T / (v^T v) to x[offset..].
void reflect(std::span<const double> v, double vtv, std::span<double> x) {
  const double w = kernels::dot(v, x);
  const double scale = 2.0 * w / vtv;
  for (std::size_t i = 0; i < v.size(); ++i) x[i] -= scale * v[i];
}

}  // namespace

std::vector<double> solve_qr(std::vector<std::vector<double>> columns, std::vector<double> rhs) {
  const std::size_t p = columns.size();
  const std::size_t m = rhs.size();
  if (m < p) throw Error(ErrorKind::insufficient_data, "fewer rows than coefficients");
  for (const auto& c : columns)
    if (c.size() != m) throw Error(ErrorKind::domain, "design column length mismatch");

  double max_norm = 0.0;
  for (const auto& c : columns) max_norm = std::max(max_norm, std::sqrt(kernels::dot(c, c)));
  const double tiny = static_cast<double>(m) * std::numeric_limits<double>::epsilon() * max_norm;

  std::vector<double> diag(p);
  std::vector<double> v;
  for (std::size_t j = 0; j < p; ++j) {
    std::span<double> col = std::span(columns[j]).subspan(j);
    const double norm = std::sqrt(kernels::dot(col, col));
    if (!(norm > tiny))
      throw Error(ErrorKind::singular_system, "design column " + std::to_string(j) + " is linearly dependent");

    const double alpha = col[0] > 0.0 ? -norm : norm;
    v.assign(col.begin(), col.end());
    v[0] -= alpha;
    const double vtv = kernels::dot(v, v);
    diag[j] = alpha;
    for (std::size_t k = j + 1; k < p; ++k) reflect(v, vtv, std::span(columns[k]).subspan(j));
    reflect(v, vtv, std::span(rhs).subspan(j));
  }

  // Back substitution on R (diag on the diagonal, columns[k][j] above it).
  std::vector<double> coef(p);
  for (std::size_t jj = p; jj-- > 0;) {
    double acc = rhs[jj];
    for (std::size_t k = jj + 1; k < p; ++k) acc -= columns[k][jj] * coef[k];
    coef[jj] = acc / diag[jj] + 0.0;
  }
  return coef;
}

LinearFit fit_linear(std::span<const std::vector<double>> regressors, std::span<const double> response) {
  const std::size_t m = response.size();
  const std::size_t p = regressors.size();
  if (m < p + 1)
    throw Error(ErrorKind::insufficient_data,
                "need at least " + std::to_string(p + 1) + " observations, have " + std::to_string(m));

  const double y_mean = kernels::shifted_mean(response);
  std::vector<double> y(response.begin(), response.end());
  for (double& v : y) v -= y_mean;

  std::vector<double> x_mean(p);
  std::vector<std::vector<double>> centered;
  centered.reserve(p);
  for (std::size_t j = 0; j < p; ++j) {
    if (regressors[j].size() != m) throw Error(ErrorKind::domain, "regressor length mismatch");
    x_mean[j] = kernels::shifted_mean(regressors[j]);
    std::vector<double> c(regressors[j]);
    for (double& v : c) v -= x_mean[j];
    centered.push_back(std::move(c));
  }

  LinearFit fit;
  fit.coef = solve_qr(std::move(centered), std::move(y));
  fit.intercept = y_mean;
  for (std::size_t j = 0; j < p; ++j) fit.intercept -= fit.coef[j] * x_mean[j];
  fit.intercept += 0.0;
  return fit;
}

}  // namespace rankfit
