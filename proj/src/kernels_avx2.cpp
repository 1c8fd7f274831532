// Compiled with -mavx2 -mfma on x86-64; selected at runtime after a cpuid
// check so the rest of the library stays baseline.

#include "src/chunked_kernels.hpp"
#include "src/vec8.hpp"

namespace sparsemm::detail {

#if defined(__AVX2__) && defined(__FMA__)

const VariantOps* avx2_ops() {
    if (!__builtin_cpu_supports("avx2") || !__builtin_cpu_supports("fma")) {
        return nullptr;
    }
    static constexpr VariantOps ops = make_variant_ops<Vec8Avx2>("avx2");
    return &ops;
}

#else

const VariantOps* avx2_ops() { return nullptr; }

#endif

}  // namespace sparsemm::detail
