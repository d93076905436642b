#pragma once

#include <cmath>

namespace cyleuler {

/// C-infinity bump b(s) = exp(1 - 1/(1 - s^2)) on |s| < 1, zero outside,
/// normalised so b(0) = 1. Shared by the mollifier and the test functions.
inline double bump(double s) {
  const double q = 1.0 - s * s;
  if (q <= 0.0) return 0.0;
  return std::exp(1.0 - 1.0 / q);
}

inline double bump_derivative(double s) {
  const double q = 1.0 - s * s;
  if (q <= 0.0) return 0.0;
  return std::exp(1.0 - 1.0 / q) * (-2.0 * s / (q * q));
}

}  // namespace cyleuler
