#pragma once
// Data-parallel inner loops behind the indicators.
//
// Every kernel has a scalar reference implementation and, on x86-64, an AVX2
// variant. The variant is chosen once at runtime from CPUID; set the
// environment variable DIVERSE_ISA=scalar to force the reference path.
// Variants agree to within rounding (summation order differs).

#include <cstddef>
#include <span>
#include <string_view>

namespace diverse::kernels {

enum class Isa { scalar, avx2 };

struct KernelTable {
  Isa isa;
  double (*sum)(const double* x, std::size_t n) noexcept;
  double (*dot)(const double* a, const double* b, std::size_t n) noexcept;
  // w' M w for a dense row-major n x n matrix. Rows with w_i == 0 are skipped.
  double (*quadratic_form)(const double* w, const double* m, std::size_t n) noexcept;
  // sum_{i=1..n} (2i - n - 1) x_i over x as given (callers sort ascending).
  double (*rank_weighted_sum)(const double* x, std::size_t n) noexcept;
};

const KernelTable& scalar_table() noexcept;
// nullptr when the variant was not compiled in.
const KernelTable* avx2_table() noexcept;

bool cpu_supports(Isa isa) noexcept;
std::string_view isa_name(Isa isa) noexcept;

// Currently selected table.
const KernelTable& active() noexcept;
Isa active_isa() noexcept;
// Throws diverse::UsageError if the ISA is not available on this build/CPU.
void select_isa(Isa isa);

inline double sum(std::span<const double> x) noexcept { return active().sum(x.data(), x.size()); }

inline double dot(std::span<const double> a, std::span<const double> b) noexcept {
  return active().dot(a.data(), b.data(), a.size() < b.size() ? a.size() : b.size());
}

inline double quadratic_form(std::span<const double> w, std::span<const double> m) noexcept {
  return active().quadratic_form(w.data(), m.data(), w.size());
}

inline double rank_weighted_sum(std::span<const double> sorted) noexcept {
  return active().rank_weighted_sum(sorted.data(), sorted.size());
}

}  // namespace diverse::kernels
