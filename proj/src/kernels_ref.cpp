#include "sparsemm/kernels.hpp"

#include "src/shape_checks.hpp"

namespace sparsemm {

std::vector<float> sddmm_reference(const CsrMatrix& pattern, const DenseMatrix& c,
                                   const DenseMatrix& b, const KernelConfig& config) {
    validate_config(config);
    detail::check_sddmm_shapes(pattern, c, b);
    const index_t n = c.cols;
    std::vector<float> out(pattern.nnz());
    for (index_t i = 0; i < pattern.rows; ++i) {
        for (index_t p = pattern.row_ptr[i]; p < pattern.row_ptr[i + 1]; ++p) {
            const index_t k = pattern.col_idx[p];
            float dp = 0.0f;
            for (index_t l = 0; l < n; ++l) {
                dp += c.at(i, l) * b.at(k, l);
            }
            out[p] = dp;
        }
    }
    return out;
}

DenseMatrix spmm_reference(const CsrMatrix& a, const DenseMatrix& b,
                           const KernelConfig& config) {
    validate_config(config);
    detail::check_spmm_shapes(a, b);
    const index_t n = b.cols;
    DenseMatrix c(a.rows, n);
    for (index_t i = 0; i < a.rows; ++i) {
        float* crow = c.row(i);
        for (index_t p = a.row_ptr[i]; p < a.row_ptr[i + 1]; ++p) {
            const float s = a.values[p];
            const float* brow = b.row(a.col_idx[p]);
            for (index_t l = 0; l < n; ++l) {
                crow[l] += s * brow[l];
            }
        }
    }
    return c;
}

DenseMatrix fusedmm_reference(const CsrMatrix& pattern, const DenseMatrix& c,
                              const DenseMatrix& b, const DenseMatrix& d,
                              const KernelConfig& config) {
    validate_config(config);
    detail::check_fusedmm_shapes(pattern, c, b, d);
    const index_t n = c.cols;
    DenseMatrix e(pattern.rows, n);
    std::vector<float> arow;
    for (index_t i = 0; i < pattern.rows; ++i) {
        const index_t begin = pattern.row_ptr[i];
        const index_t nnzr = pattern.row_ptr[i + 1] - begin;
        arow.assign(nnzr, 0.0f);
        for (index_t j = 0; j < nnzr; ++j) {
            const index_t k = pattern.col_idx[begin + j];
            for (index_t l = 0; l < n; ++l) {
                arow[j] += c.at(i, l) * b.at(k, l);
            }
        }
        float* erow = e.row(i);
        for (index_t j = 0; j < nnzr; ++j) {
            const float s = arow[j];
            const float* drow = d.row(pattern.col_idx[begin + j]);
            for (index_t l = 0; l < n; ++l) {
                erow[l] += s * drow[l];
            }
        }
    }
    return e;
}

}  // namespace sparsemm
