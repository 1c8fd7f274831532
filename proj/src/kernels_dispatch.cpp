#include <cmath>
#include <cstdlib>
#include <thread>

#include "sparsemm/kernels.hpp"

#include "src/chunked_kernels.hpp"
#include "src/parallel.hpp"
#include "src/shape_checks.hpp"

namespace sparsemm {

namespace {

bool power_of_two(std::size_t v) { return v != 0 && (v & (v - 1)) == 0; }

const detail::VariantOps& best_ops() {
    if (const detail::VariantOps* avx2 = detail::avx2_ops()) return *avx2;
    return detail::generic_ops();
}

}  // namespace

void validate_config(const KernelConfig& config) {
    if (config.vlc < 8 || config.vlc > 64 || !power_of_two(config.vlc)) {
        throw InvalidConfigError("vlc must be one of {8,16,32,64}");
    }
    if (config.nt > 16 || !power_of_two(config.nt)) {
        throw InvalidConfigError("nt must be one of {1,2,4,8,16}");
    }
}

double occupancy(std::size_t m, std::size_t nt) {
    const double waves = static_cast<double>(m) * static_cast<double>(nt) /
                         static_cast<double>(kOccupancyWaveSize);
    return waves / std::ceil(waves);
}

std::size_t select_nt(std::size_t m) {
    std::size_t best = 1;
    double best_occ = occupancy(m, 1);
    for (std::size_t nt = 2; nt <= 16; nt *= 2) {
        const double occ = occupancy(m, nt);
        if (occ > best_occ) {
            best_occ = occ;
            best = nt;
        }
    }
    return best;
}

std::size_t resolve_workers(std::size_t workers) {
    if (workers != 0) return workers;
    if (const char* env = std::getenv("SPARSEMM_WORKERS")) {
        const long v = std::atol(env);
        if (v > 0) return static_cast<std::size_t>(v);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1;
}

std::string active_variant() { return best_ops().name; }

std::vector<float> sddmm(const CsrMatrix& pattern, const DenseMatrix& c,
                         const DenseMatrix& b, const KernelConfig& config) {
    validate_config(config);
    detail::check_sddmm_shapes(pattern, c, b);
    const index_t n = c.cols;
    if (n != 32 && n != 128) return sddmm_reference(pattern, c, b, config);

    const detail::VariantOps& ops = best_ops();
    const auto share_fn = n == 32 ? ops.sddmm_share_n32 : ops.sddmm_share_n128;
    const std::size_t nt = config.nt;
    const std::size_t workers = resolve_workers(config.workers);

    std::vector<float> out(pattern.nnz());
    detail::parallel_for(pattern.rows * nt, workers, [&](std::size_t t0, std::size_t t1) {
        for (std::size_t t = t0; t < t1; ++t) {
            const index_t i = t / nt;
            const std::size_t share = t % nt;
            const index_t row_begin = pattern.row_ptr[i];
            const index_t nnzr = pattern.row_ptr[i + 1] - row_begin;
            const index_t nnzt = (nnzr + nt - 1) / nt;
            const index_t begin = std::min<index_t>(share * nnzt, nnzr);
            const index_t end = std::min<index_t>(begin + nnzt, nnzr);
            if (begin >= end) continue;
            share_fn(c.row(i), b.data.data(), pattern.col_idx.data() + row_begin + begin,
                     out.data() + row_begin + begin, end - begin, config.vlc,
                     config.prefetch);
        }
    });
    return out;
}

DenseMatrix spmm(const CsrMatrix& a, const DenseMatrix& b, const KernelConfig& config) {
    validate_config(config);
    detail::check_spmm_shapes(a, b);
    const index_t n = b.cols;
    if (n != 32 && n != 128) return spmm_reference(a, b, config);

    const detail::VariantOps& ops = best_ops();
    const auto row_fn = n == 32 ? ops.spmm_row_n32 : ops.spmm_row_n128;
    const std::size_t workers = resolve_workers(config.workers);

    DenseMatrix c(a.rows, n);
    detail::parallel_for(a.rows, workers, [&](std::size_t r0, std::size_t r1) {
        for (std::size_t i = r0; i < r1; ++i) {
            const index_t begin = a.row_ptr[i];
            row_fn(a.values.data() + begin, a.col_idx.data() + begin,
                   a.row_ptr[i + 1] - begin, b.data.data(), c.row(i), config.vlc,
                   config.prefetch);
        }
    });
    return c;
}

DenseMatrix fusedmm(const CsrMatrix& pattern, const DenseMatrix& c, const DenseMatrix& b,
                    const DenseMatrix& d, const KernelConfig& config) {
    validate_config(config);
    if (config.nt != 1) throw InvalidConfigError("fusedmm requires nt == 1");
    detail::check_fusedmm_shapes(pattern, c, b, d);
    const index_t n = c.cols;
    if (n != 32 && n != 128) return fusedmm_reference(pattern, c, b, d, config);

    const detail::VariantOps& ops = best_ops();
    const auto row_fn = n == 32 ? ops.fusedmm_row_n32 : ops.fusedmm_row_n128;
    const std::size_t workers = resolve_workers(config.workers);

    DenseMatrix e(pattern.rows, n);
    detail::parallel_for(pattern.rows, workers, [&](std::size_t r0, std::size_t r1) {
        for (std::size_t i = r0; i < r1; ++i) {
            const index_t begin = pattern.row_ptr[i];
            row_fn(c.row(i), b.data.data(), d.data.data(),
                   pattern.col_idx.data() + begin, pattern.row_ptr[i + 1] - begin,
                   e.row(i), config.vlc, config.prefetch);
        }
    });
    return e;
}

}  // namespace sparsemm
