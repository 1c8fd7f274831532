#pragma once

#include <string>

#include "sparsemm/csr.hpp"
#include "sparsemm/errors.hpp"

namespace sparsemm::detail {

inline void check_sddmm_shapes(const CsrMatrix& pattern, const DenseMatrix& c,
                               const DenseMatrix& b) {
    if (pattern.rows != c.rows || pattern.cols != b.rows || c.cols != b.cols) {
        throw ShapeMismatchError("sddmm: pattern " + std::to_string(pattern.rows) + "x" +
                                 std::to_string(pattern.cols) + ", C " +
                                 std::to_string(c.rows) + "x" + std::to_string(c.cols) +
                                 ", B " + std::to_string(b.rows) + "x" +
                                 std::to_string(b.cols));
    }
}

inline void check_spmm_shapes(const CsrMatrix& a, const DenseMatrix& b) {
    if (a.cols != b.rows) {
        throw ShapeMismatchError("spmm: A has " + std::to_string(a.cols) +
                                 " columns, B has " + std::to_string(b.rows) + " rows");
    }
}

inline void check_fusedmm_shapes(const CsrMatrix& pattern, const DenseMatrix& c,
                                 const DenseMatrix& b, const DenseMatrix& d) {
    check_sddmm_shapes(pattern, c, b);
    if (d.rows != pattern.cols || d.cols != c.cols) {
        throw ShapeMismatchError("fusedmm: D " + std::to_string(d.rows) + "x" +
                                 std::to_string(d.cols) + " does not match pattern/C");
    }
}

}  // namespace sparsemm::detail
