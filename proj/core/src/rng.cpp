#include "subtype/rng.hpp"

#include <algorithm>
#include <cmath>

namespace subtype {

double CounterRng::next_gauss() {
  const double u1 = next_double_open();
  const double u2 = next_double();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

double CounterRng::next_trunc_normal(double mean, double sd, double lo, double hi) {
  if (sd <= 0.0) return std::clamp(mean, lo, hi);
  for (int i = 0; i < 1024; ++i) {
    const double x = mean + sd * next_gauss();
    if (x >= lo && x <= hi) return x;
  }
  // Interval far in the tail; fall back to the nearest bound.
  return std::clamp(mean, lo, hi);
}

}  // namespace subtype
