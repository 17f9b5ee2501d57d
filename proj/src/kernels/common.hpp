#pragma once

#include <cmath>
#include <numbers>

namespace qcc::kernels::detail {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;
inline constexpr double kInvTwoPi = 1.0 / kTwoPi;
inline constexpr double kQuarterTurn = 0.5 * std::numbers::pi;
inline constexpr double kThreeQuarterTurn = 1.5 * std::numbers::pi;

// cos(d) >= 0 decided by reducing d into [0, 2pi) and testing the quadrant,
// which needs only operations with an exact vector counterpart.
inline bool cos_nonnegative(double d) {
  const double r = d - std::floor(d * kInvTwoPi) * kTwoPi;
  return r <= kQuarterTurn || r >= kThreeQuarterTurn;
}

}  // namespace qcc::kernels::detail
