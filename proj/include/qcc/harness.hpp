#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "qcc/imperfections.hpp"

namespace qcc {

enum class Protocol { Quantum2, Classical2, Spin2, Quantum3, Classical3 };

std::string_view to_string(Protocol p);

/// Throws UsageError for names outside the registry.
Protocol parse_protocol(std::string_view name);

int parties_of(Protocol p);

struct RunConfig {
  Protocol protocol = Protocol::Quantum2;
  int n = 4;
  DetectorModel detector;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  unsigned workers = 1;
};

struct TrialSummary {
  std::string protocol;
  int parties = 2;
  std::optional<int> n;
  DetectorModel detector;
  std::uint64_t trials = 0;
  std::uint64_t successes = 0;
  double estimate = 0.0;
  double standard_error = 0.0;
  std::uint64_t seed = 0;
};

/// Throws UsageError for zero trials or workers, an invalid N or detector
/// parameters.
void validate_config(const RunConfig& config);

/// Trial i draws its instance and all measurement and detector randomness
/// from RandomStream(seed, i); workers take contiguous trial ranges, so the
/// success count is identical for every worker count.
///
/// quantum2 and quantum3 run through the detector model (perfect detectors
/// by default); classical2, spin2 and classical3 ignore it.
TrialSummary run_trials(const RunConfig& config);

/// sqrt(p (1 - p) / trials).
double binomial_standard_error(double estimate, std::uint64_t trials);

}  // namespace qcc
