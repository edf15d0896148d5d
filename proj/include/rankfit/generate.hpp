#ifndef RANKFIT_GENERATE_HPP
#define RANKFIT_GENERATE_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "rankfit/models.hpp"
#include "rankfit/random.hpp"
#include "rankfit/series.hpp"

namespace rankfit {

/// Multiplicative lognormal noise: value * exp(sigma * z), z ~ N(0, 1).
struct NoiseSpec {
  double sigma = 0.0;
  std::uint64_t seed = 0;
};

/// Model values with log-space Gaussian noise, re-sorted descending and
/// re-ranked. `n` is required for Zipf and must agree with params otherwise.
RankedSeries generate_synthetic(const ModelParams& params, const NoiseSpec& noise,
                                std::optional<std::size_t> n = std::nullopt);

struct SimonConfig {
  double p_new = 0.1;       // probability a step opens a new source, in (0, 1)
  std::size_t steps = 1;    // total items allocated, >= 1
  std::uint64_t seed = 0;
};

/// Throws Error(domain) unless 0 < p_new < 1 and steps >= 1.
void validate(const SimonConfig& config);

/// State of a Simon "rich gets richer" allocation. Items are recorded by
/// owner, so picking a uniformly random past item selects a source with
/// probability proportional to its count in O(1).
class SimonProcess {
public:
  explicit SimonProcess(std::uint64_t seed) : rng_(seed) {}

  std::size_t add_source();
  /// Existing source drawn proportionally to its count. Requires >= 1 item.
  std::size_t pick_existing();
  void award(std::size_t source);
  /// One allocation step: a new source with probability p_new, else an
  /// award to a proportionally chosen existing source.
  void step(double p_new);

  const std::vector<std::uint64_t>& counts() const noexcept { return counts_; }
  std::size_t items() const noexcept { return owners_.size(); }

private:
  Rng rng_;
  std::vector<std::uint64_t> counts_;
  std::vector<std::size_t> owners_;
};

/// Runs the process for config.steps items starting from one source with one
/// item; returns the final source counts ranked by rank_raw.
RankedSeries simulate_simon(const SimonConfig& config);

}  // namespace rankfit

#endif  // RANKFIT_GENERATE_HPP
