#include <cstdlib>
#include <string>

#include "eprsim/simd/kernels.hpp"

namespace eprsim::simd {

#if defined(EPRSIM_HAVE_AVX2)
const KernelTable& avx2_kernel_table();
#endif
#if defined(EPRSIM_HAVE_NEON)
const KernelTable& neon_kernel_table();
#endif

const KernelTable* avx2_kernels() {
#if defined(EPRSIM_HAVE_AVX2)
    static const bool supported = __builtin_cpu_supports("avx2");
    return supported ? &avx2_kernel_table() : nullptr;
#else
    return nullptr;
#endif
}

const KernelTable* neon_kernels() {
#if defined(EPRSIM_HAVE_NEON)
    return &neon_kernel_table();  // Advanced SIMD is mandatory on AArch64.
#else
    return nullptr;
#endif
}

std::vector<const KernelTable*> available_kernels() {
    std::vector<const KernelTable*> out{&scalar_kernels()};
    if (const auto* k = avx2_kernels()) out.push_back(k);
    if (const auto* k = neon_kernels()) out.push_back(k);
    return out;
}

const KernelTable* kernels_by_name(std::string_view name) {
    for (const auto* k : available_kernels())
        if (name == k->name) return k;
    return nullptr;
}

const KernelTable& active_kernels() {
    static const KernelTable& chosen = [] () -> const KernelTable& {
        if (const char* env = std::getenv("EPRSIM_SIMD"); env != nullptr && std::string(env) != "auto") {
            if (const auto* k = kernels_by_name(env)) return *k;
        }
        return *available_kernels().back();
    }();
    return chosen;
}

}  // namespace eprsim::simd
