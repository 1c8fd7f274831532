#pragma once

#include <filesystem>
#include <iosfwd>

#include "sparsemm/csr.hpp"

namespace sparsemm {

// Matrix Market coordinate format, "real general", 1-based indices.
void write_matrix_market(const CsrMatrix& a, std::ostream& os);
void write_matrix_market(const CsrMatrix& a, const std::filesystem::path& path);
CsrMatrix read_matrix_market(std::istream& is);
CsrMatrix read_matrix_market(const std::filesystem::path& path);

// Raw binary dump: little-endian u64 header (rows, cols, nnz), then
// row_ptr and col_idx as u64 and values as f32.
void write_csr_binary(const CsrMatrix& a, const std::filesystem::path& path);
CsrMatrix read_csr_binary(const std::filesystem::path& path);

// Dense companion format: u64 rows, u64 cols, then row-major f32 data.
void write_dense_binary(const DenseMatrix& d, const std::filesystem::path& path);
DenseMatrix read_dense_binary(const std::filesystem::path& path);

}  // namespace sparsemm
