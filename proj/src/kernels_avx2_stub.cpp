// Non-x86 builds: no AVX2 variant.

#include "src/chunked_kernels.hpp"

namespace sparsemm::detail {

const VariantOps* avx2_ops() { return nullptr; }

}  // namespace sparsemm::detail
