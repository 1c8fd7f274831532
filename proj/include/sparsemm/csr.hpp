#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "sparsemm/errors.hpp"

namespace sparsemm {

using index_t = std::size_t;

/// Sparse matrix in compressed sparse row form. Immutable by convention
/// after construction; safe to share read-only across workers.
struct CsrMatrix {
    index_t rows = 0;
    index_t cols = 0;
    std::vector<index_t> row_ptr;  // length rows+1
    std::vector<index_t> col_idx;  // length nnz, strictly increasing per row
    std::vector<float> values;     // length nnz

    index_t nnz() const { return col_idx.size(); }

    bool operator==(const CsrMatrix&) const = default;
};

/// Row-major dense matrix of 32-bit floats.
struct DenseMatrix {
    index_t rows = 0;
    index_t cols = 0;
    std::vector<float> data;  // length rows*cols

    DenseMatrix() = default;
    DenseMatrix(index_t r, index_t c) : rows(r), cols(c), data(r * c, 0.0f) {}

    float& at(index_t i, index_t j) { return data[i * cols + j]; }
    float at(index_t i, index_t j) const { return data[i * cols + j]; }
    const float* row(index_t i) const { return data.data() + i * cols; }
    float* row(index_t i) { return data.data() + i * cols; }

    bool operator==(const DenseMatrix&) const = default;
};

struct Triplet {
    index_t row;
    index_t col;
    float value;
};

/// Builds a valid CsrMatrix from an unordered triplet list.
/// Throws OutOfBoundsError for indices outside the declared shape and
/// DuplicateEntryError when two triplets share a coordinate.
CsrMatrix build_csr(std::vector<Triplet> triplets, index_t rows, index_t cols);

DenseMatrix csr_to_dense(const CsrMatrix& a);

/// Exact zeros are dropped; csr_to_dense inverts the result.
CsrMatrix dense_to_csr(const DenseMatrix& d);

/// One message per invariant violation; empty report means the matrix is valid.
std::vector<std::string> validate(const CsrMatrix& a);

}  // namespace sparsemm
