#include <cstdlib>
#include <stdexcept>
#include <string>

#include "qcc/kernels/kernels.hpp"

namespace qcc::kernels {

std::string_view to_string(Isa isa) { return isa == Isa::Avx2 ? "avx2" : "scalar"; }

Isa detected_isa() {
#if defined(__x86_64__) || defined(_M_X64)
  static const Isa isa = __builtin_cpu_supports("avx2") ? Isa::Avx2 : Isa::Scalar;
  return isa;
#else
  return Isa::Scalar;
#endif
}

Isa active_isa() {
  const char* force = std::getenv("QCC_SIMD");
  if (force != nullptr && std::string(force) == "scalar") return Isa::Scalar;
  return detected_isa();
}

bool isa_available(Isa isa) { return isa == Isa::Scalar || detected_isa() == Isa::Avx2; }

double expected_success_point(const SuccessModel& model, double eta, double mu) {
  double out = 0.0;
  scalar::expected_success(model, &eta, &mu, &out, 1);
  return out;
}

void expected_success(const SuccessModel& model, std::span<const double> eta, std::span<const double> mu,
                      std::span<double> out, Isa isa) {
  if (eta.size() != mu.size() || eta.size() != out.size()) {
    throw std::invalid_argument("expected_success: spans must have equal length");
  }
  if (model.parties != 2 && model.parties != 3) throw std::invalid_argument("parties must be 2 or 3");
  if (isa == Isa::Avx2 && isa_available(Isa::Avx2)) {
    avx2::expected_success(model, eta.data(), mu.data(), out.data(), out.size());
  } else {
    scalar::expected_success(model, eta.data(), mu.data(), out.data(), out.size());
  }
}

std::uint64_t spin_agreement_count(double theta, double phi, std::span<const double> lambdas, Isa isa) {
  if (isa == Isa::Avx2 && isa_available(Isa::Avx2)) {
    return avx2::spin_agreement_count(theta, phi, lambdas.data(), lambdas.size());
  }
  return scalar::spin_agreement_count(theta, phi, lambdas.data(), lambdas.size());
}

}  // namespace qcc::kernels
