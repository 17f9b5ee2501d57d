#pragma once

#include <cstdint>
#include <span>
#include <string_view>

// Data-parallel inner loops. Every kernel has a scalar reference and, on
// x86-64, an AVX2 variant chosen at runtime. Both perform the same IEEE
// operations in the same order (no FMA contraction), so results are
// bit-identical and outputs do not depend on the host CPU.

namespace qcc::kernels {

enum class Isa { Scalar, Avx2 };

std::string_view to_string(Isa isa);

/// Best instruction set supported by this CPU.
Isa detected_isa();

/// detected_isa(), unless QCC_SIMD=scalar is set in the environment.
Isa active_isa();

bool isa_available(Isa isa);

/// Coefficients of the imperfect-detector success formula
///   w = (eta*mu)^k, m = (1-eta)^k,
///   p = w*p_quantum + m*p_classical + (1 - w - m)/2
/// where k is the number of parties.
struct SuccessModel {
  int parties;
  double p_quantum;
  double p_classical;
};

double expected_success_point(const SuccessModel& model, double eta, double mu);

/// out[i] = expected_success_point(model, eta[i], mu[i]). All spans must have
/// equal length.
void expected_success(const SuccessModel& model, std::span<const double> eta, std::span<const double> mu,
                      std::span<double> out, Isa isa);

/// Number of hidden angles lambda for which sign(cos(theta - lambda)) equals
/// sign(cos(phi - lambda)), with sign(0) = +1. In the classical spin model
/// Bob's value is the negated sign, so this counts opposite outcomes.
std::uint64_t spin_agreement_count(double theta, double phi, std::span<const double> lambdas, Isa isa);

namespace scalar {
void expected_success(const SuccessModel& model, const double* eta, const double* mu, double* out, std::size_t n);
std::uint64_t spin_agreement_count(double theta, double phi, const double* lambdas, std::size_t n);
}  // namespace scalar

namespace avx2 {
void expected_success(const SuccessModel& model, const double* eta, const double* mu, double* out, std::size_t n);
std::uint64_t spin_agreement_count(double theta, double phi, const double* lambdas, std::size_t n);
}  // namespace avx2

}  // namespace qcc::kernels
