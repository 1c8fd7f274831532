#include "src/chunked_kernels.hpp"
#include "src/vec8.hpp"

namespace sparsemm::detail {

const VariantOps& generic_ops() {
    static constexpr VariantOps ops = make_variant_ops<Vec8Scalar>("generic");
    return ops;
}

}  // namespace sparsemm::detail
