#include <cmath>
#include <numbers>

#include "qcc/kernels/kernels.hpp"
#include "src/kernels/common.hpp"

namespace qcc::kernels::scalar {

void expected_success(const SuccessModel& model, const double* eta, const double* mu, double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const double em = eta[i] * mu[i];
    const double miss1 = 1.0 - eta[i];
    double w = em * em;
    double m = miss1 * miss1;
    if (model.parties == 3) {
      w = w * em;
      m = m * miss1;
    }
    const double rest = (1.0 - w) - m;
    out[i] = (w * model.p_quantum + m * model.p_classical) + rest * 0.5;
  }
}

std::uint64_t spin_agreement_count(double theta, double phi, const double* lambdas, std::size_t n) {
  std::uint64_t count = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const bool a = detail::cos_nonnegative(theta - lambdas[i]);
    const bool b = detail::cos_nonnegative(phi - lambdas[i]);
    count += a == b ? 1 : 0;
  }
  return count;
}

}  // namespace qcc::kernels::scalar
