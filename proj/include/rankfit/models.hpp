#ifndef RANKFIT_MODELS_HPP
#define RANKFIT_MODELS_HPP

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include "rankfit/series.hpp"

namespace rankfit {

/// f(r) = k / r^alpha
struct ZipfParams {
  double k = 1.0;
  double alpha = 1.0;
};

/// f(r) = [(n + rho) / (r + rho)]^(1 + epsilon). No scale factor: f(n) = 1.
struct MandelbrotParams {
  double rho = 0.0;
  double epsilon = 0.0;
  std::size_t n = 1;
};

/// f(r) = k [(n + 1 - r) / r]^b
struct LavaletteParams {
  double k = 1.0;
  double b = 1.0;
  std::size_t n = 1;
};

/// Two-exponent law f(r) = k (n + 1 - r)^b / r^a.
/// b = 0 gives Zipf with alpha = a; a = b gives Lavalette.
struct BetaLikeParams {
  double k = 1.0;
  double a = 1.0;
  double b = 1.0;
  std::size_t n = 1;
};

using ModelParams = std::variant<ZipfParams, MandelbrotParams, LavaletteParams, BetaLikeParams>;

/// Catalog order; also the tie-break order used by model comparison.
enum class Model { zipf, mandelbrot, lavalette, beta_like };

inline constexpr std::array<Model, 4> kAllModels{Model::zipf, Model::mandelbrot, Model::lavalette,
                                                 Model::beta_like};

Model model_of(const ModelParams& params) noexcept;
std::string_view model_name(Model model) noexcept;
std::optional<Model> parse_model(std::string_view name) noexcept;
/// Number of free parameters when fitted (n is data, not a parameter).
int parameter_count(Model model) noexcept;

/// Series length carried by the parameters; empty for Zipf.
std::optional<std::size_t> series_length(const ModelParams& params) noexcept;

/// Throws Error(domain) when the parameter invariants fail.
void validate(const ModelParams& params);

/// f(r) for one rank. Throws Error(domain) on invalid params or a rank outside 1..n (r >= 1 for Zipf).
double evaluate(const ModelParams& params, std::size_t rank);

/// f(1..n) with no ordering requirement. `n` is required for Zipf and must agree with params otherwise.
std::vector<double> tabulate(const ModelParams& params, std::optional<std::size_t> n = std::nullopt);

/// f(1..n) as a ranked series. Throws Error(domain) if the tabulated values are not non-increasing.
RankedSeries curve(const ModelParams& params, std::optional<std::size_t> n = std::nullopt);

}  // namespace rankfit

#endif  // RANKFIT_MODELS_HPP
