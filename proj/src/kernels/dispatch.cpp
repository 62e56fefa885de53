#include <atomic>
#include <cstdlib>
#include <string_view>

#include "lexp/error.hpp"
#include "lexp/kernels.hpp"

namespace lexp::kernels {
namespace {

constexpr KernelTable kScalar{Isa::scalar, dot_scalar, axpy_scalar, scale_scalar,
                              leaky_relu_scalar};
#if defined(__x86_64__) || defined(_M_X64)
constexpr KernelTable kAvx2{Isa::avx2, dot_avx2, axpy_avx2, scale_avx2, leaky_relu_avx2};
#endif

const KernelTable* pick_default() {
  if (const char* env = std::getenv("LEXP_KERNELS")) {
    if (std::string_view(env) == "scalar") return &kScalar;
  }
#if defined(__x86_64__) || defined(_M_X64)
  if (cpu_has_avx2()) return &kAvx2;
#endif
  return &kScalar;
}

std::atomic<const KernelTable*>& current() {
  static std::atomic<const KernelTable*> table{pick_default()};
  return table;
}

}  // namespace

bool cpu_has_avx2() {
#if defined(__x86_64__) || defined(_M_X64)
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

const KernelTable& table_for(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return kScalar;
    case Isa::avx2:
#if defined(__x86_64__) || defined(_M_X64)
      if (cpu_has_avx2()) return kAvx2;
#endif
      throw ArgumentError("AVX2 kernels requested but not supported by this CPU");
  }
  return kScalar;
}

const KernelTable& active() { return *current().load(std::memory_order_acquire); }

void set_kernel_isa(Isa isa) { current().store(&table_for(isa), std::memory_order_release); }

std::string_view isa_name(Isa isa) { return isa == Isa::avx2 ? "avx2" : "scalar"; }

}  // namespace lexp::kernels
