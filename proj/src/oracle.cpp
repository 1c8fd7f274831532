#include "sparsemm/oracle.hpp"

#include <cmath>

#include "sparsemm/errors.hpp"

namespace sparsemm {

std::vector<float> dense_sddmm_oracle(const DenseMatrix& c, const DenseMatrix& b,
                                      const CsrMatrix& pattern) {
    if (pattern.rows != c.rows || pattern.cols != b.rows || c.cols != b.cols) {
        throw ShapeMismatchError("dense_sddmm_oracle: inconsistent shapes");
    }
    const index_t m = c.rows, k = b.rows, n = c.cols;
    std::vector<double> product(m * k, 0.0);
    for (index_t i = 0; i < m; ++i) {
        for (index_t j = 0; j < k; ++j) {
            double acc = 0.0;
            for (index_t l = 0; l < n; ++l) {
                acc += static_cast<double>(c.at(i, l)) * static_cast<double>(b.at(j, l));
            }
            product[i * k + j] = acc;
        }
    }
    std::vector<float> out(pattern.nnz());
    for (index_t i = 0; i < pattern.rows; ++i) {
        for (index_t p = pattern.row_ptr[i]; p < pattern.row_ptr[i + 1]; ++p) {
            out[p] = static_cast<float>(product[i * k + pattern.col_idx[p]]);
        }
    }
    return out;
}

DenseMatrix dense_spmm_oracle(const DenseMatrix& a_dense, const DenseMatrix& b) {
    if (a_dense.cols != b.rows) {
        throw ShapeMismatchError("dense_spmm_oracle: inner dimensions disagree");
    }
    const index_t m = a_dense.rows, k = a_dense.cols, n = b.cols;
    DenseMatrix c(m, n);
    for (index_t i = 0; i < m; ++i) {
        for (index_t j = 0; j < n; ++j) {
            double acc = 0.0;
            for (index_t l = 0; l < k; ++l) {
                acc += static_cast<double>(a_dense.at(i, l)) * static_cast<double>(b.at(l, j));
            }
            c.at(i, j) = static_cast<float>(acc);
        }
    }
    return c;
}

DenseMatrix fused_oracle(const DenseMatrix& c, const DenseMatrix& b, const DenseMatrix& d,
                         const CsrMatrix& pattern) {
    if (d.rows != pattern.cols || d.cols != c.cols) {
        throw ShapeMismatchError("fused_oracle: D shape inconsistent");
    }
    const std::vector<float> sampled = dense_sddmm_oracle(c, b, pattern);
    DenseMatrix a_dense(pattern.rows, pattern.cols);
    for (index_t i = 0; i < pattern.rows; ++i) {
        for (index_t p = pattern.row_ptr[i]; p < pattern.row_ptr[i + 1]; ++p) {
            a_dense.at(i, pattern.col_idx[p]) = sampled[p];
        }
    }
    return dense_spmm_oracle(a_dense, d);
}

ComparisonReport compare(std::span<const float> x, std::span<const float> y, double atol,
                         double rtol) {
    if (x.size() != y.size()) {
        throw ShapeMismatchError("compare: size mismatch");
    }
    ComparisonReport report;
    report.atol = atol;
    report.rtol = rtol;
    double worst_excess = -1.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double xi = x[i], yi = y[i];
        const double abs_err = std::abs(xi - yi);
        const double mag = std::max(std::abs(xi), std::abs(yi));
        const double rel_err = mag > 0.0 ? abs_err / mag : 0.0;
        report.max_abs_err = std::max(report.max_abs_err, abs_err);
        report.max_rel_err = std::max(report.max_rel_err, rel_err);
        const double excess = abs_err - (atol + rtol * mag);
        if (excess > worst_excess) {
            worst_excess = excess;
            report.worst_index = i;
        }
        if (excess > 0.0) report.pass = false;
    }
    return report;
}

ComparisonReport compare(const DenseMatrix& x, const DenseMatrix& y, double atol,
                         double rtol) {
    if (x.rows != y.rows || x.cols != y.cols) {
        throw ShapeMismatchError("compare: dense shape mismatch");
    }
    return compare(std::span<const float>(x.data), std::span<const float>(y.data), atol, rtol);
}

}  // namespace sparsemm
