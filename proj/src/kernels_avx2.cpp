// Compiled with -mavx2 -mfma. Only reached after a CPUID check in
// kernels_dispatch.cpp.
#include <immintrin.h>

#include "kernels_internal.hpp"

namespace diverse::kernels::detail {

namespace {

inline double hsum(__m256d v) noexcept {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d pair = _mm_add_pd(lo, hi);
  const __m128d swapped = _mm_unpackhi_pd(pair, pair);
  return _mm_cvtsd_f64(_mm_add_sd(pair, swapped));
}

}  // namespace

double sum_avx2(const double* x, std::size_t n) noexcept {
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    acc0 = _mm256_add_pd(acc0, _mm256_loadu_pd(x + i));
    acc1 = _mm256_add_pd(acc1, _mm256_loadu_pd(x + i + 4));
  }
  for (; i + 4 <= n; i += 4) acc0 = _mm256_add_pd(acc0, _mm256_loadu_pd(x + i));
  double tail = 0.0;
  for (; i < n; ++i) tail += x[i];
  return hsum(_mm256_add_pd(acc0, acc1)) + tail;
}

double dot_avx2(const double* a, const double* b, std::size_t n) noexcept {
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
    acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i + 4), _mm256_loadu_pd(b + i + 4), acc1);
  }
  for (; i + 4 <= n; i += 4) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
  }
  double tail = 0.0;
  for (; i < n; ++i) tail += a[i] * b[i];
  return hsum(_mm256_add_pd(acc0, acc1)) + tail;
}

double quadratic_form_avx2(const double* w, const double* m, std::size_t n) noexcept {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (w[i] == 0.0) continue;
    acc += w[i] * dot_avx2(m + i * n, w, n);
  }
  return acc;
}

double rank_weighted_sum_avx2(const double* x, std::size_t n) noexcept {
  // Coefficients 2i - n - 1 for ranks i..i+3, stepping by 8 per block of four.
  const double first = 1.0 - static_cast<double>(n);
  __m256d coeff = _mm256_setr_pd(first, first + 2.0, first + 4.0, first + 6.0);
  const __m256d step = _mm256_set1_pd(8.0);
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    acc = _mm256_fmadd_pd(coeff, _mm256_loadu_pd(x + i), acc);
    coeff = _mm256_add_pd(coeff, step);
  }
  double tail = 0.0;
  for (; i < n; ++i) {
    tail += (2.0 * static_cast<double>(i + 1) - static_cast<double>(n) - 1.0) * x[i];
  }
  return hsum(acc) + tail;
}

}  // namespace diverse::kernels::detail
