#pragma once

#include <cmath>
#include <cstdint>

namespace qcc::test {

inline double binomial_sigma(double p, std::uint64_t n) { return std::sqrt(p * (1.0 - p) / static_cast<double>(n)); }

/// |estimate - expected| <= k * sigma, with sigma taken at the expected value.
inline bool within_sigma(double estimate, double expected, double sigma, double k = 3.0) {
  return std::abs(estimate - expected) <= k * sigma;
}

}  // namespace qcc::test
