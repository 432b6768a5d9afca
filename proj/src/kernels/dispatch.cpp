#include <atomic>
#include <cstdlib>
#include <string_view>

#include "kernels_internal.hpp"
#include "numrad/kernels.hpp"

namespace numrad::kernels {
namespace {

bool cpu_has_avx2() noexcept {
#if defined(NUMRAD_HAVE_AVX2_KERNELS) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

const KernelTable* detect() noexcept {
  if (const char* env = std::getenv("NUMRAD_KERNELS")) {
    if (std::string_view(env) == "scalar") return &scalar_table();
  }
  if (const KernelTable* t = avx2_table()) return t;
  return &scalar_table();
}

std::atomic<const KernelTable*>& slot() noexcept {
  static std::atomic<const KernelTable*> current{detect()};
  return current;
}

}  // namespace

const KernelTable* avx2_table() noexcept {
#if defined(NUMRAD_HAVE_AVX2_KERNELS)
  static const bool ok = cpu_has_avx2();
  return ok ? &detail::avx2_table_unchecked() : nullptr;
#else
  return nullptr;
#endif
}

const KernelTable& active() noexcept { return *slot().load(std::memory_order_relaxed); }

bool select(std::string_view name) noexcept {
  if (name == "scalar") {
    slot().store(&scalar_table());
    return true;
  }
  if (name == "avx2") {
    if (const KernelTable* t = avx2_table()) {
      slot().store(t);
      return true;
    }
  }
  return false;
}

}  // namespace numrad::kernels
