#pragma once

#include <algorithm>
#include <cstddef>

#include "sparsemm/csr.hpp"

namespace sparsemm::detail {

inline constexpr std::size_t kMaxVlc = 64;

// Per-share / per-row chunk kernels for one variant and lane width.
// N is the dense column count (32 or 128); V an 8-lane float vector type.
template <class V, int N>
struct ChunkedKernels {
    static_assert(N % V::width == 0);
    static constexpr int kBlocks = N / V::width;

    // One SDDMM share: dot products of one C row against the B rows named
    // by cols[0..count), written to out[0..count) in CSR order.
    static void sddmm_share(const float* crow, const float* b, const index_t* cols,
                            float* out, std::size_t count, std::size_t vlc,
                            bool prefetch) {
        V creg[kBlocks];
        for (int blk = 0; blk < kBlocks; ++blk) creg[blk] = V::load(crow + blk * V::width);

        for (std::size_t base = 0; base < count; base += vlc) {
            const std::size_t len = std::min(vlc, count - base);
            if (prefetch && base + vlc < count) V::prefetch(cols + base + vlc);
            for (std::size_t e = 0; e < len; ++e) {
                const float* brow = b + cols[base + e] * N;
                V acc = V::mul(creg[0], V::load(brow));
                for (int blk = 1; blk < kBlocks; ++blk) {
                    acc = V::madd(creg[blk], V::load(brow + blk * V::width), acc);
                }
                out[base + e] = V::hsum(acc);
            }
        }
    }

    // One SPMM output row: SAXPY accumulation over the row's nonzeros in
    // CSR order, one store of the finished row.
    static void spmm_row(const float* vals, const index_t* cols, std::size_t count,
                         const float* b, float* crow, std::size_t vlc, bool prefetch) {
        V acc[kBlocks];
        for (int blk = 0; blk < kBlocks; ++blk) acc[blk] = V::zero();

        for (std::size_t base = 0; base < count; base += vlc) {
            const std::size_t len = std::min(vlc, count - base);
            if (prefetch && base + vlc < count) {
                V::prefetch(cols + base + vlc);
                V::prefetch(vals + base + vlc);
            }
            for (std::size_t e = 0; e < len; ++e) {
                const V s = V::broadcast(vals[base + e]);
                const float* brow = b + cols[base + e] * N;
                for (int blk = 0; blk < kBlocks; ++blk) {
                    acc[blk] = V::madd(s, V::load(brow + blk * V::width), acc[blk]);
                }
            }
        }
        for (int blk = 0; blk < kBlocks; ++blk) acc[blk].store(crow + blk * V::width);
    }

    // One FusedMM output row: per chunk, the SDDMM loop fills a VLC-sized
    // register buffer which the SPMM loop consumes immediately; the
    // intermediate sparse values never reach memory owned by the caller.
    static void fusedmm_row(const float* crow, const float* b, const float* d,
                            const index_t* cols, std::size_t count, float* erow,
                            std::size_t vlc, bool prefetch) {
        V creg[kBlocks];
        for (int blk = 0; blk < kBlocks; ++blk) creg[blk] = V::load(crow + blk * V::width);
        V eacc[kBlocks];
        for (int blk = 0; blk < kBlocks; ++blk) eacc[blk] = V::zero();

        float avals[kMaxVlc];
        for (std::size_t base = 0; base < count; base += vlc) {
            const std::size_t len = std::min(vlc, count - base);
            if (prefetch && base + vlc < count) V::prefetch(cols + base + vlc);
            for (std::size_t e = 0; e < len; ++e) {
                const float* brow = b + cols[base + e] * N;
                V acc = V::mul(creg[0], V::load(brow));
                for (int blk = 1; blk < kBlocks; ++blk) {
                    acc = V::madd(creg[blk], V::load(brow + blk * V::width), acc);
                }
                avals[e] = V::hsum(acc);
            }
            for (std::size_t e = 0; e < len; ++e) {
                const V s = V::broadcast(avals[e]);
                const float* drow = d + cols[base + e] * N;
                for (int blk = 0; blk < kBlocks; ++blk) {
                    eacc[blk] = V::madd(s, V::load(drow + blk * V::width), eacc[blk]);
                }
            }
        }
        for (int blk = 0; blk < kBlocks; ++blk) eacc[blk].store(erow + blk * V::width);
    }
};

// Function-pointer table for one vector variant, instantiated for the two
// supported dense widths.
struct VariantOps {
    const char* name;
    void (*sddmm_share_n32)(const float*, const float*, const index_t*, float*,
                            std::size_t, std::size_t, bool);
    void (*sddmm_share_n128)(const float*, const float*, const index_t*, float*,
                             std::size_t, std::size_t, bool);
    void (*spmm_row_n32)(const float*, const index_t*, std::size_t, const float*, float*,
                         std::size_t, bool);
    void (*spmm_row_n128)(const float*, const index_t*, std::size_t, const float*, float*,
                          std::size_t, bool);
    void (*fusedmm_row_n32)(const float*, const float*, const float*, const index_t*,
                            std::size_t, float*, std::size_t, bool);
    void (*fusedmm_row_n128)(const float*, const float*, const float*, const index_t*,
                             std::size_t, float*, std::size_t, bool);
};

template <class V>
constexpr VariantOps make_variant_ops(const char* name) {
    return VariantOps{
        name,
        &ChunkedKernels<V, 32>::sddmm_share,
        &ChunkedKernels<V, 128>::sddmm_share,
        &ChunkedKernels<V, 32>::spmm_row,
        &ChunkedKernels<V, 128>::spmm_row,
        &ChunkedKernels<V, 32>::fusedmm_row,
        &ChunkedKernels<V, 128>::fusedmm_row,
    };
}

const VariantOps& generic_ops();

// Null when the CPU lacks AVX2/FMA or the build does not include the variant.
const VariantOps* avx2_ops();

}  // namespace sparsemm::detail
