#ifndef RANKFIT_RANDOM_HPP
#define RANKFIT_RANDOM_HPP

#include <cstdint>
#include <random>

namespace rankfit {

/// Seeded generator: std::mt19937_64 (sequence fixed by the C++ standard)
/// with hand-written transforms, since the standard distributions are
/// implementation-defined. Same seed, same build: same stream.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }
  /// Uniform on [0, 1) with 53 random bits.
  double uniform01();
  /// Uniform integer on [0, bound), bound > 0, without modulo bias.
  std::uint64_t uniform_below(std::uint64_t bound);
  /// Standard normal via the Marsaglia polar method.
  double normal();

private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace rankfit

#endif  // RANKFIT_RANDOM_HPP
