#include "rankfit/models.hpp"

#include <cmath>
#include <string>

#include "rankfit/error.hpp"

namespace rankfit {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void require_positive_scale(double k) {
  if (!std::isfinite(k) || !(k > 0.0)) throw Error(ErrorKind::domain, "scale factor k must be finite and > 0");
}

void require_finite(double x, const char* name) {
  if (!std::isfinite(x)) throw Error(ErrorKind::domain, std::string(name) + " must be finite");
}

void require_length(std::size_t n) {
  if (n < 1) throw Error(ErrorKind::domain, "series length n must be >= 1");
}

void require_rank(std::size_t rank, std::optional<std::size_t> n) {
  if (n) {
    if (rank < 1 || rank > *n)
      throw Error(ErrorKind::domain,
                  "rank " + std::to_string(rank) + " outside valid range 1.." + std::to_string(*n));
  } else if (rank < 1) {
    throw Error(ErrorKind::domain, "rank " + std::to_string(rank) + " outside valid range r >= 1");
  }
}

}  // namespace

Model model_of(const ModelParams& params) noexcept { return static_cast<Model>(params.index()); }

std::string_view model_name(Model model) noexcept {
  switch (model) {
    case Model::zipf: return "zipf";
    case Model::mandelbrot: return "mandelbrot";
    case Model::lavalette: return "lavalette";
    case Model::beta_like: return "beta-like";
  }
  return "unknown";
}

std::optional<Model> parse_model(std::string_view name) noexcept {
  for (Model m : kAllModels)
    if (model_name(m) == name) return m;
  return std::nullopt;
}

int parameter_count(Model model) noexcept { return model == Model::beta_like ? 3 : 2; }

std::optional<std::size_t> series_length(const ModelParams& params) noexcept {
  return std::visit(overloaded{
                        [](const ZipfParams&) -> std::optional<std::size_t> { return std::nullopt; },
                        [](const auto& p) -> std::optional<std::size_t> { return p.n; },
                    },
                    params);
}

void validate(const ModelParams& params) {
  std::visit(overloaded{
                 [](const ZipfParams& p) {
                   require_positive_scale(p.k);
                   require_finite(p.alpha, "alpha");
                 },
                 [](const MandelbrotParams& p) {
                   require_finite(p.rho, "rho");
                   require_finite(p.epsilon, "epsilon");
                   if (!(p.rho > -1.0)) throw Error(ErrorKind::domain, "rho must be > -1");
                   require_length(p.n);
                 },
                 [](const LavaletteParams& p) {
                   require_positive_scale(p.k);
                   require_finite(p.b, "b");
                   require_length(p.n);
                 },
                 [](const BetaLikeParams& p) {
                   require_positive_scale(p.k);
                   require_finite(p.a, "a");
                   require_finite(p.b, "b");
                   require_length(p.n);
                 },
             },
             params);
}

double evaluate(const ModelParams& params, std::size_t rank) {
  validate(params);
  require_rank(rank, series_length(params));
  const double r = static_cast<double>(rank);

  // Zipf and beta-like share the `k * numerator / r^exponent` ordering so that
  // beta-like with b = 0 reproduces Zipf bit for bit; Lavalette uses the same
  // split form so that a = b reproduces it bit for bit.
  const double f = std::visit(
      overloaded{
          [&](const ZipfParams& p) { return p.k / std::pow(r, p.alpha); },
          [&](const MandelbrotParams& p) {
            const double n = static_cast<double>(p.n);
            return std::pow((n + p.rho) / (r + p.rho), 1.0 + p.epsilon);
          },
          [&](const LavaletteParams& p) {
            const double tail = static_cast<double>(p.n) + 1.0 - r;
            return p.k * std::pow(tail, p.b) / std::pow(r, p.b);
          },
          [&](const BetaLikeParams& p) {
            const double tail = static_cast<double>(p.n) + 1.0 - r;
            return p.k * std::pow(tail, p.b) / std::pow(r, p.a);
          },
      },
      params);

  if (!std::isfinite(f) || !(f > 0.0))
    throw Error(ErrorKind::domain, "model value at rank " + std::to_string(rank) + " is not finite and positive");
  return f;
}

std::vector<double> tabulate(const ModelParams& params, std::optional<std::size_t> n) {
  const auto own = series_length(params);
  if (!own && !n) throw Error(ErrorKind::domain, "zipf curve needs an explicit series length");
  if (own && n && *own != *n)
    throw Error(ErrorKind::domain, "requested length " + std::to_string(*n) + " disagrees with model length " +
                                       std::to_string(*own));
  const std::size_t len = own ? *own : *n;
  if (len == 0) throw Error(ErrorKind::empty_series, "curve of zero ranks");

  std::vector<double> out(len);
  for (std::size_t r = 1; r <= len; ++r) out[r - 1] = evaluate(params, r);
  return out;
}

RankedSeries curve(const ModelParams& params, std::optional<std::size_t> n) {
  std::vector<double> values = tabulate(params, n);
  for (std::size_t i = 1; i < values.size(); ++i)
    if (values[i] > values[i - 1])
      throw Error(ErrorKind::domain, std::string(model_name(model_of(params))) +
                                         " parameters give a curve that increases at rank " + std::to_string(i + 1));
  return RankedSeries::from_ordered(std::move(values));
}

}  // namespace rankfit
