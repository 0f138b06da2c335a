#include <atomic>
#include <cstdlib>
#include <string>

#include "diverse/errors.hpp"
#include "kernels_internal.hpp"

namespace diverse::kernels {

namespace {

constexpr KernelTable kScalar{
    Isa::scalar,
    &detail::sum_scalar,
    &detail::dot_scalar,
    &detail::quadratic_form_scalar,
    &detail::rank_weighted_sum_scalar,
};

#ifdef DIVERSE_HAVE_AVX2
constexpr KernelTable kAvx2{
    Isa::avx2,
    &detail::sum_avx2,
    &detail::dot_avx2,
    &detail::quadratic_form_avx2,
    &detail::rank_weighted_sum_avx2,
};
#endif

const KernelTable* table_for(Isa isa) noexcept {
  if (isa == Isa::scalar) return &kScalar;
  return cpu_supports(isa) ? avx2_table() : nullptr;
}

const KernelTable* initial_table() noexcept {
  if (const char* forced = std::getenv("DIVERSE_ISA")) {
    const std::string name(forced);
    if (name == "scalar") return &kScalar;
    if (name == "avx2" && cpu_supports(Isa::avx2)) return avx2_table();
  }
  if (cpu_supports(Isa::avx2)) return avx2_table();
  return &kScalar;
}

std::atomic<const KernelTable*>& current() noexcept {
  static std::atomic<const KernelTable*> table{initial_table()};
  return table;
}

}  // namespace

const KernelTable& scalar_table() noexcept { return kScalar; }

const KernelTable* avx2_table() noexcept {
#ifdef DIVERSE_HAVE_AVX2
  return &kAvx2;
#else
  return nullptr;
#endif
}

bool cpu_supports(Isa isa) noexcept {
  switch (isa) {
    case Isa::scalar:
      return true;
    case Isa::avx2:
#if defined(DIVERSE_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
      return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
      return false;
#endif
  }
  return false;
}

std::string_view isa_name(Isa isa) noexcept {
  switch (isa) {
    case Isa::scalar:
      return "scalar";
    case Isa::avx2:
      return "avx2";
  }
  return "unknown";
}

const KernelTable& active() noexcept { return *current().load(std::memory_order_acquire); }

Isa active_isa() noexcept { return active().isa; }

void select_isa(Isa isa) {
  const KernelTable* table = table_for(isa);
  if (table == nullptr) {
    throw UsageError("kernel variant '" + std::string(isa_name(isa)) +
                     "' is not available on this build or CPU");
  }
  current().store(table, std::memory_order_release);
}

}  // namespace diverse::kernels
