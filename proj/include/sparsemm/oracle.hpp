#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "sparsemm/csr.hpp"

namespace sparsemm {

struct ComparisonReport {
    double max_abs_err = 0.0;
    double max_rel_err = 0.0;
    std::size_t worst_index = 0;
    bool pass = true;
    double atol = 0.0;
    double rtol = 0.0;
};

inline constexpr double kDefaultAtol = 1e-5;
inline constexpr double kDefaultRtol = 1e-4;

// Dense-algebra references, double-precision accumulation, rounded to f32
// at the end. Deliberately independent of the kernels module.

/// Full M x K product C * B^T, sampled at the pattern positions in CSR order.
std::vector<float> dense_sddmm_oracle(const DenseMatrix& c, const DenseMatrix& b,
                                      const CsrMatrix& pattern);

/// Triple-loop dense product.
DenseMatrix dense_spmm_oracle(const DenseMatrix& a_dense, const DenseMatrix& b);

/// (C * B^T sampled by pattern) * D via the two oracles above.
DenseMatrix fused_oracle(const DenseMatrix& c, const DenseMatrix& b, const DenseMatrix& d,
                         const CsrMatrix& pattern);

/// Elementwise |x-y| <= atol + rtol*max(|x|,|y|); mismatches are reported,
/// never thrown.
ComparisonReport compare(std::span<const float> x, std::span<const float> y,
                         double atol = kDefaultAtol, double rtol = kDefaultRtol);
ComparisonReport compare(const DenseMatrix& x, const DenseMatrix& y,
                         double atol = kDefaultAtol, double rtol = kDefaultRtol);

}  // namespace sparsemm
