#pragma once

#include <array>
#include <cstdint>

#include "qcc/kernels/kernels.hpp"
#include "qcc/quantum_core.hpp"

namespace qcc {

/// Two measurement settings at each side.
struct SetupPair {
  std::array<double, 2> alice;
  std::array<double, 2> bob;
};

/// a1 = 0, a2 = pi/2, b1 = pi/4, b2 = 3pi/4.
SetupPair canonical_setup();

/// p^d(a1,b1), p^d(a2,b1), p^d(a2,b2) and p^e(a1,b2), in that order.
struct HardyTerms {
  std::array<double, 4> terms;
  double sum() const { return terms[0] + terms[1] + terms[2] + terms[3]; }
};

HardyTerms hardy_terms_quantum(const SetupPair& setup);
double hardy_sum_quantum(const SetupPair& setup);

struct LocalDeterministicStrategy {
  std::array<Outcome, 2> alice;
  std::array<Outcome, 2> bob;
};

int hardy_sum_local(const LocalDeterministicStrategy& strategy);

/// All 16 assignments; index bits (a1, a2, b1, b2) from the top, 1 = Minus.
std::array<LocalDeterministicStrategy, 16> all_local_strategies();

/// Largest hardy_sum_local over all 16 strategies.
int max_local_hardy_sum();

struct SpinModelEstimate {
  HardyTerms terms;
  double estimate;
  double standard_error;
  std::uint64_t trials;
};

/// Monte Carlo over the classical spin model A = sign(cos(a - lambda)),
/// B = -sign(cos(b - lambda)) with lambda uniform on [0, 2pi). Each of the
/// four terms uses its own `trials` hidden angles; the angle for term j,
/// trial i comes from stream (seed, 4i + j), so the estimate does not depend
/// on `workers`.
SpinModelEstimate hardy_sum_spin_model(const SetupPair& setup, std::uint64_t trials, std::uint64_t seed,
                                       unsigned workers = 1, kernels::Isa isa = kernels::active_isa());

/// Fraction of hidden angles giving opposite spin-model outcomes at settings
/// (theta, phi), estimated from `trials` angles.
double spin_model_opposite_fraction(double theta, double phi, std::uint64_t trials, std::uint64_t seed,
                                    kernels::Isa isa = kernels::active_isa());

}  // namespace qcc
