#pragma once

#include <algorithm>
#include <cmath>

namespace setpair {

inline constexpr double kRelTol = 1e-9;
inline constexpr double kAbsTol = 1e-12;

inline bool approx_equal(double a, double b, double rel = kRelTol, double abs = kAbsTol) {
  const double diff = std::fabs(a - b);
  return diff <= abs || diff <= rel * std::max(std::fabs(a), std::fabs(b));
}

}  // namespace setpair
