#ifndef RANKFIT_GOLDEN_SECTION_HPP
#define RANKFIT_GOLDEN_SECTION_HPP

#include <cmath>
#include <cstddef>

namespace rankfit {

struct ScalarMinimum {
  double x = 0.0;
  double fx = 0.0;
  std::size_t evaluations = 0;
};

/// Golden-section search for a minimum of f on [lo, hi]. Stops when the
/// bracket is narrower than `tolerance` or after `max_iterations`. Returns the
/// best point evaluated, so the answer is never worse than the final probes.
template <class F>
ScalarMinimum golden_section_minimize(F&& f, double lo, double hi, double tolerance, std::size_t max_iterations = 500) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;

  double c = hi - inv_phi * (hi - lo);
  double d = lo + inv_phi * (hi - lo);
  double fc = f(c);
  double fd = f(d);
  ScalarMinimum best{fc <= fd ? c : d, fc <= fd ? fc : fd, 2};

  for (std::size_t it = 0; it < max_iterations && (hi - lo) > tolerance; ++it) {
    if (fc <= fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - inv_phi * (hi - lo);
      fc = f(c);
      if (fc < best.fx) best = {c, fc, best.evaluations};
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + inv_phi * (hi - lo);
      fd = f(d);
      if (fd < best.fx) best = {d, fd, best.evaluations};
    }
    ++best.evaluations;
    if (!(c < d)) break;  // bracket collapsed to rounding
  }
  return best;
}

}  // namespace rankfit

#endif  // RANKFIT_GOLDEN_SECTION_HPP
