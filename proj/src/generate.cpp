#include "rankfit/generate.hpp"

#include <cmath>

#include "rankfit/error.hpp"
#include "rankfit/ingest.hpp"

namespace rankfit {

RankedSeries generate_synthetic(const ModelParams& params, const NoiseSpec& noise, std::optional<std::size_t> n) {
  if (!std::isfinite(noise.sigma) || noise.sigma < 0.0)
    throw Error(ErrorKind::domain, "noise sigma must be finite and >= 0");

  std::vector<double> values = tabulate(params, n);
  if (noise.sigma > 0.0) {
    Rng rng(noise.seed);
    for (double& v : values) v *= std::exp(noise.sigma * rng.normal());
  }
  return rank_raw(values);
}

void validate(const SimonConfig& config) {
  if (!(config.p_new > 0.0 && config.p_new < 1.0))
    throw Error(ErrorKind::domain, "p_new must lie strictly between 0 and 1");
  if (config.steps < 1) throw Error(ErrorKind::domain, "steps must be >= 1");
}

std::size_t SimonProcess::add_source() {
  counts_.push_back(1);
  owners_.push_back(counts_.size() - 1);
  return counts_.size() - 1;
}

std::size_t SimonProcess::pick_existing() {
  if (owners_.empty()) throw Error(ErrorKind::domain, "no items to pick from");
  return owners_[static_cast<std::size_t>(rng_.uniform_below(owners_.size()))];
}

void SimonProcess::award(std::size_t source) {
  ++counts_.at(source);
  owners_.push_back(source);
}

void SimonProcess::step(double p_new) {
  if (rng_.uniform01() < p_new)
    add_source();
  else
    award(pick_existing());
}

RankedSeries simulate_simon(const SimonConfig& config) {
  validate(config);
  SimonProcess process(config.seed);
  process.add_source();
  for (std::size_t t = 1; t < config.steps; ++t) process.step(config.p_new);

  std::vector<double> values(process.counts().begin(), process.counts().end());
  return rank_raw(values);
}

}  // namespace rankfit
