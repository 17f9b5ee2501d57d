#include <cmath>

#include "qcc/kernels/kernels.hpp"
#include "src/kernels/common.hpp"

#if defined(__x86_64__) || defined(_M_X64)
#include <immintrin.h>
#define QCC_HAVE_AVX2_KERNELS 1
#else
#define QCC_HAVE_AVX2_KERNELS 0
#endif

namespace qcc::kernels::avx2 {

#if QCC_HAVE_AVX2_KERNELS

__attribute__((target("avx2"))) void expected_success(const SuccessModel& model, const double* eta,
                                                      const double* mu, double* out, std::size_t n) {
  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d half = _mm256_set1_pd(0.5);
  const __m256d pq = _mm256_set1_pd(model.p_quantum);
  const __m256d pc = _mm256_set1_pd(model.p_classical);
  const bool three = model.parties == 3;

  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d e = _mm256_loadu_pd(eta + i);
    const __m256d em = _mm256_mul_pd(e, _mm256_loadu_pd(mu + i));
    const __m256d miss1 = _mm256_sub_pd(one, e);
    __m256d w = _mm256_mul_pd(em, em);
    __m256d m = _mm256_mul_pd(miss1, miss1);
    if (three) {
      w = _mm256_mul_pd(w, em);
      m = _mm256_mul_pd(m, miss1);
    }
    const __m256d rest = _mm256_sub_pd(_mm256_sub_pd(one, w), m);
    const __m256d head = _mm256_add_pd(_mm256_mul_pd(w, pq), _mm256_mul_pd(m, pc));
    _mm256_storeu_pd(out + i, _mm256_add_pd(head, _mm256_mul_pd(rest, half)));
  }
  if (i < n) scalar::expected_success(model, eta + i, mu + i, out + i, n - i);
}

namespace {

__attribute__((target("avx2"))) inline __m256d cos_nonnegative_mask(__m256d d) {
  const __m256d two_pi = _mm256_set1_pd(detail::kTwoPi);
  const __m256d inv_two_pi = _mm256_set1_pd(detail::kInvTwoPi);
  const __m256d turns = _mm256_floor_pd(_mm256_mul_pd(d, inv_two_pi));
  const __m256d r = _mm256_sub_pd(d, _mm256_mul_pd(turns, two_pi));
  const __m256d lo = _mm256_cmp_pd(r, _mm256_set1_pd(detail::kQuarterTurn), _CMP_LE_OQ);
  const __m256d hi = _mm256_cmp_pd(r, _mm256_set1_pd(detail::kThreeQuarterTurn), _CMP_GE_OQ);
  return _mm256_or_pd(lo, hi);
}

}  // namespace

__attribute__((target("avx2"))) std::uint64_t spin_agreement_count(double theta, double phi,
                                                                   const double* lambdas, std::size_t n) {
  const __m256d t = _mm256_set1_pd(theta);
  const __m256d p = _mm256_set1_pd(phi);
  std::uint64_t count = 0;
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d l = _mm256_loadu_pd(lambdas + i);
    const __m256d a = cos_nonnegative_mask(_mm256_sub_pd(t, l));
    const __m256d b = cos_nonnegative_mask(_mm256_sub_pd(p, l));
    // Lanes where the two masks agree.
    const __m256d differ = _mm256_xor_pd(a, b);
    const int bits = _mm256_movemask_pd(differ);
    count += static_cast<std::uint64_t>(4 - __builtin_popcount(static_cast<unsigned>(bits)));
  }
  if (i < n) count += scalar::spin_agreement_count(theta, phi, lambdas + i, n - i);
  return count;
}

#else

void expected_success(const SuccessModel& model, const double* eta, const double* mu, double* out, std::size_t n) {
  scalar::expected_success(model, eta, mu, out, n);
}

std::uint64_t spin_agreement_count(double theta, double phi, const double* lambdas, std::size_t n) {
  return scalar::spin_agreement_count(theta, phi, lambdas, n);
}

#endif

}  // namespace qcc::kernels::avx2
