#pragma once

#include <cstdint>
#include <vector>

#include "sparsemm/csr.hpp"

namespace sparsemm {

/// One benchmark grid point. Sparsity is the fraction of zeros.
struct BenchmarkCase {
    index_t m;
    index_t k;
    index_t n;
    double sparsity;
    std::uint64_t seed;

    bool operator==(const BenchmarkCase&) const = default;
};

/// Nonzeros per row: round(k * (1 - sparsity)).
index_t row_nnz(index_t k, double sparsity);

/// Uniform-random sparsity mask: every row has exactly row_nnz(k, sparsity)
/// nonzeros at distinct sorted columns, all values 1. Bitwise reproducible
/// per (m, k, sparsity, seed). Throws DegenerateRowError when a row would
/// be empty.
CsrMatrix gen_pattern(index_t m, index_t k, double sparsity, std::uint64_t seed);

/// Dense matrix with entries i.i.d. uniform on [-1, 1], counter-based:
/// entry value depends only on (seed, flat index).
DenseMatrix gen_dense(index_t rows, index_t cols, std::uint64_t seed);

/// Deterministic seed for a grid case, mixed from its parameters.
std::uint64_t case_seed(index_t m, index_t k, index_t n, double sparsity);

/// The full 72-case grid: 12 (M,K) shapes x sparsity {0.7,0.8,0.9} x N {32,128}.
std::vector<BenchmarkCase> full_grid();

/// Same structure with M and K divided by scale_divisor (floor 64).
/// scale_divisor must be a power of two dividing 1024.
std::vector<BenchmarkCase> scaled_grid(index_t scale_divisor);

namespace detail {
std::uint64_t splitmix64(std::uint64_t& state);
}

}  // namespace sparsemm
