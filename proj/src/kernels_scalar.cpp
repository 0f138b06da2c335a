#include "kernels_internal.hpp"

namespace diverse::kernels::detail {

double sum_scalar(const double* x, std::size_t n) noexcept {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += x[i];
  return acc;
}

double dot_scalar(const double* a, const double* b, std::size_t n) noexcept {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += a[i] * b[i];
  return acc;
}

double quadratic_form_scalar(const double* w, const double* m, std::size_t n) noexcept {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (w[i] == 0.0) continue;
    acc += w[i] * dot_scalar(m + i * n, w, n);
  }
  return acc;
}

double rank_weighted_sum_scalar(const double* x, std::size_t n) noexcept {
  const double nn = static_cast<double>(n);
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double rank = static_cast<double>(i + 1);
    acc += (2.0 * rank - nn - 1.0) * x[i];
  }
  return acc;
}

}  // namespace diverse::kernels::detail
