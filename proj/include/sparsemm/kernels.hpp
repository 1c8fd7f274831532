#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "sparsemm/csr.hpp"

namespace sparsemm {

/// Work items launched per device "wave"; the NT selection heuristic keeps
/// M*NT as close to a multiple of this as possible.
inline constexpr std::size_t kOccupancyWaveSize = 4096;

struct KernelConfig {
    std::size_t vlc = 32;    // chunk length in nonzeros, one of {8,16,32,64}
    std::size_t nt = 1;      // threads per row (SDDMM only), one of {1,2,4,8,16}
    std::size_t workers = 0; // concurrent workers over rows; 0 = auto
    bool prefetch = false;   // software prefetch hint, never changes results
};

void validate_config(const KernelConfig& config);

/// Fraction of the wave capacity used when m rows are split nt ways:
/// (m*nt/4096) / ceil(m*nt/4096).
double occupancy(std::size_t m, std::size_t nt);

/// Minimum power-of-two NT <= 16 maximizing occupancy; ties go to the
/// smaller NT.
std::size_t select_nt(std::size_t m);

/// Number of workers a config resolves to (0 -> SPARSEMM_WORKERS env or
/// hardware concurrency).
std::size_t resolve_workers(std::size_t workers);

// Scalar reference kernels, single-threaded row loops. The config argument
// is only shape/validity-checked; results do not depend on it.
std::vector<float> sddmm_reference(const CsrMatrix& pattern, const DenseMatrix& c,
                                   const DenseMatrix& b, const KernelConfig& config = {});
DenseMatrix spmm_reference(const CsrMatrix& a, const DenseMatrix& b,
                           const KernelConfig& config = {});
DenseMatrix fusedmm_reference(const CsrMatrix& pattern, const DenseMatrix& c,
                              const DenseMatrix& b, const DenseMatrix& d,
                              const KernelConfig& config = {});

// Chunked vectorized kernels. N in {32,128} takes the vector fast path;
// other N falls back to the scalar reference. Results are a pure function
// of (inputs, vlc, nt): independent of workers and prefetch.
std::vector<float> sddmm(const CsrMatrix& pattern, const DenseMatrix& c,
                         const DenseMatrix& b, const KernelConfig& config = {});
DenseMatrix spmm(const CsrMatrix& a, const DenseMatrix& b, const KernelConfig& config = {});
DenseMatrix fusedmm(const CsrMatrix& pattern, const DenseMatrix& c, const DenseMatrix& b,
                    const DenseMatrix& d, const KernelConfig& config = {});

/// Name of the vector variant selected at runtime ("avx2" or "generic").
std::string active_variant();

}  // namespace sparsemm
