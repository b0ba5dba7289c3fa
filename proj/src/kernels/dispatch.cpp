#include <atomic>
#include <cstdlib>
#include <string_view>

#include "softcvx/kernels.hpp"

namespace softcvx::kernels {

#if defined(SOFTCVX_HAVE_AVX2)
const KernelTable& avx2_table();
#endif

const KernelTable* avx2() {
#if defined(SOFTCVX_HAVE_AVX2) && (defined(__x86_64__) || defined(__i386__))
  static const bool supported = __builtin_cpu_supports("avx2");
  return supported ? &avx2_table() : nullptr;
#else
  return nullptr;
#endif
}

namespace {

const KernelTable* select_default() {
  const char* env = std::getenv("SOFTCVX_KERNELS");
  if (env != nullptr && std::string_view(env) == "scalar") return &scalar();
  if (const KernelTable* wide = avx2()) return wide;
  return &scalar();
}

std::atomic<const KernelTable*>& slot() {
  static std::atomic<const KernelTable*> current{select_default()};
  return current;
}

}  // namespace

const KernelTable& active() { return *slot().load(std::memory_order_relaxed); }

void set_active(const KernelTable& table) { slot().store(&table, std::memory_order_relaxed); }

}  // namespace softcvx::kernels
