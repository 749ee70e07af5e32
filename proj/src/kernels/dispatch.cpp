#include <cstdlib>
#include <string_view>

#include "wsplab/kernels/kernels.hpp"

namespace wsp::kernels {

#if defined(WSPLAB_HAVE_AVX2)
const KernelTable& avx2_table_unchecked();
#endif

const KernelTable* avx2_table() {
#if defined(WSPLAB_HAVE_AVX2) && (defined(__x86_64__) || defined(__i386__))
  static const bool supported = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
  return supported ? &avx2_table_unchecked() : nullptr;
#else
  return nullptr;
#endif
}

namespace {

const KernelTable& select() {
  if (const char* env = std::getenv("WSPLAB_SIMD"); env != nullptr && std::string_view(env) == "scalar") {
    return scalar_table();
  }
  if (const KernelTable* t = avx2_table()) return *t;
  return scalar_table();
}

}  // namespace

const KernelTable& active() {
  static const KernelTable& table = select();
  return table;
}

}  // namespace wsp::kernels
