#pragma once

#include "diverse/kernels.hpp"

namespace diverse::kernels::detail {

double sum_scalar(const double* x, std::size_t n) noexcept;
double dot_scalar(const double* a, const double* b, std::size_t n) noexcept;
double quadratic_form_scalar(const double* w, const double* m, std::size_t n) noexcept;
double rank_weighted_sum_scalar(const double* x, std::size_t n) noexcept;

#ifdef DIVERSE_HAVE_AVX2
double sum_avx2(const double* x, std::size_t n) noexcept;
double dot_avx2(const double* a, const double* b, std::size_t n) noexcept;
double quadratic_form_avx2(const double* w, const double* m, std::size_t n) noexcept;
double rank_weighted_sum_avx2(const double* x, std::size_t n) noexcept;
#endif

}  // namespace diverse::kernels::detail
