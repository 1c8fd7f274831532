#pragma once

#include <cstddef>

#if defined(__AVX2__) && defined(__FMA__)
#include <immintrin.h>
#endif

namespace sparsemm::detail {

// 8-lane float vector in plain scalars. The horizontal sum uses the same
// pairwise tree as the AVX2 variant so both reduce in a fixed order.
struct Vec8Scalar {
    static constexpr int width = 8;
    float lane[8];

    static Vec8Scalar zero() { return Vec8Scalar{}; }

    static Vec8Scalar load(const float* p) {
        Vec8Scalar v;
        for (int i = 0; i < 8; ++i) v.lane[i] = p[i];
        return v;
    }

    static Vec8Scalar broadcast(float s) {
        Vec8Scalar v;
        for (int i = 0; i < 8; ++i) v.lane[i] = s;
        return v;
    }

    static Vec8Scalar mul(Vec8Scalar a, Vec8Scalar b) {
        Vec8Scalar v;
        for (int i = 0; i < 8; ++i) v.lane[i] = a.lane[i] * b.lane[i];
        return v;
    }

    static Vec8Scalar madd(Vec8Scalar a, Vec8Scalar b, Vec8Scalar acc) {
        Vec8Scalar v;
        for (int i = 0; i < 8; ++i) v.lane[i] = acc.lane[i] + a.lane[i] * b.lane[i];
        return v;
    }

    static float hsum(Vec8Scalar v) {
        float s4[4];
        for (int i = 0; i < 4; ++i) s4[i] = v.lane[i] + v.lane[i + 4];
        const float a = s4[0] + s4[2];
        const float b = s4[1] + s4[3];
        return a + b;
    }

    void store(float* p) const {
        for (int i = 0; i < 8; ++i) p[i] = lane[i];
    }

    static void prefetch(const void*) {}
};

#if defined(__AVX2__) && defined(__FMA__)

struct Vec8Avx2 {
    static constexpr int width = 8;
    __m256 v;

    static Vec8Avx2 zero() { return {_mm256_setzero_ps()}; }
    static Vec8Avx2 load(const float* p) { return {_mm256_loadu_ps(p)}; }
    static Vec8Avx2 broadcast(float s) { return {_mm256_set1_ps(s)}; }
    static Vec8Avx2 mul(Vec8Avx2 a, Vec8Avx2 b) { return {_mm256_mul_ps(a.v, b.v)}; }
    static Vec8Avx2 madd(Vec8Avx2 a, Vec8Avx2 b, Vec8Avx2 acc) {
        return {_mm256_fmadd_ps(a.v, b.v, acc.v)};
    }

    static float hsum(Vec8Avx2 x) {
        __m128 s4 = _mm_add_ps(_mm256_castps256_ps128(x.v), _mm256_extractf128_ps(x.v, 1));
        __m128 s2 = _mm_add_ps(s4, _mm_movehl_ps(s4, s4));
        __m128 s1 = _mm_add_ss(s2, _mm_shuffle_ps(s2, s2, 0x1));
        return _mm_cvtss_f32(s1);
    }

    void store(float* p) const { _mm256_storeu_ps(p, v); }

    static void prefetch(const void* p) {
        _mm_prefetch(static_cast<const char*>(p), _MM_HINT_T0);
    }
};

#endif  // __AVX2__ && __FMA__

}  // namespace sparsemm::detail
