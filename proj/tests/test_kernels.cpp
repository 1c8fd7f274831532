#include <algorithm>
#include <random>

#include <doctest.h>

#include "sparsemm/kernels.hpp"
#include "sparsemm/oracle.hpp"
#include "sparsemm/workload.hpp"
#include "tests/fig1.hpp"

using namespace sparsemm;

namespace {

CsrMatrix randomized(CsrMatrix a, std::uint64_t seed) {
    if (a.nnz() > 0) a.values = gen_dense(1, a.nnz(), seed).data;
    return a;
}

DenseMatrix ones(index_t rows, index_t cols) {
    DenseMatrix d(rows, cols);
    std::fill(d.data.begin(), d.data.end(), 1.0f);
    return d;
}

// Independent argmax used to cross-check select_nt.
std::size_t brute_force_nt(std::size_t m) {
    std::size_t best = 1;
    double best_occ = -1.0;
    for (std::size_t nt : {1, 2, 4, 8, 16}) {
        const double occ = occupancy(m, nt);
        if (occ > best_occ) {
            best_occ = occ;
            best = nt;
        }
    }
    return best;
}

}  // namespace

TEST_CASE("occupancy formula") {
    CHECK(occupancy(1024, 4) == 1.0);
    CHECK(occupancy(4096, 1) == 1.0);
    CHECK(occupancy(3072, 4) == 1.0);
    CHECK(occupancy(1000, 4) == doctest::Approx(4000.0 / 4096.0).epsilon(1e-12));
}

TEST_CASE("select_nt reproduces the documented choices") {
    CHECK(select_nt(1024) == 4);
    CHECK(select_nt(3072) == 4);
    CHECK(select_nt(4096) == 1);
}

TEST_CASE("select_nt agrees with brute force on sampled sizes") {
    std::mt19937_64 rng(99);
    for (int t = 0; t < 2000; ++t) {
        const std::size_t m = 1 + rng() % 65536;
        CHECK(select_nt(m) == brute_force_nt(m));
    }
}

TEST_CASE("sddmm trivial and golden cases") {
    const CsrMatrix pattern = testdata::fig1_csr();
    SUBCASE("zero C gives zero output") {
        const auto out = sddmm(pattern, DenseMatrix(5, 32), gen_dense(4, 32, 1));
        CHECK(out == std::vector<float>(pattern.nnz(), 0.0f));
    }
    SUBCASE("all-ones factors give N at every position") {
        for (index_t n : {32, 128}) {
            const auto out = sddmm(pattern, ones(5, n), ones(4, n));
            REQUIRE(out.size() == pattern.nnz());
            for (float v : out) CHECK(v == static_cast<float>(n));
        }
    }
}

TEST_CASE("spmm trivial and golden cases") {
    SUBCASE("identity leaves B unchanged") {
        std::vector<Triplet> eye;
        for (index_t i = 0; i < 6; ++i) eye.push_back({i, i, 1.0f});
        const DenseMatrix b = gen_dense(6, 32, 3);
        CHECK(spmm(build_csr(eye, 6, 6), b) == b);
    }
    SUBCASE("worked example row sums") {
        // N=1 falls back to the scalar reference path
        const DenseMatrix c = spmm(testdata::fig1_csr(), ones(4, 1));
        CHECK(c.data == std::vector<float>{3, 3, 9, 6, 24});
        const DenseMatrix r = spmm_reference(testdata::fig1_csr(), ones(4, 1));
        CHECK(r.data == c.data);
    }
}

TEST_CASE("reference kernels match the dense oracles on a random case") {
    const CsrMatrix pattern = gen_pattern(64, 64, 0.7, 11);
    const CsrMatrix a = randomized(pattern, 12);
    const DenseMatrix c = gen_dense(64, 32, 13);
    const DenseMatrix b = gen_dense(64, 32, 14);
    const DenseMatrix d = gen_dense(64, 32, 15);
    CHECK(compare(sddmm_reference(pattern, c, b), dense_sddmm_oracle(c, b, pattern)).pass);
    CHECK(compare(spmm_reference(a, b), dense_spmm_oracle(csr_to_dense(a), b)).pass);
    CHECK(compare(fusedmm_reference(pattern, c, b, d), fused_oracle(c, b, d, pattern)).pass);
}

TEST_CASE("vectorized kernels match oracle and reference across configs") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 6; ++t) {
        const index_t m = 32 + rng() % 200;
        const index_t k = 32 + rng() % 200;
        const index_t n = (t % 2 == 0) ? 32 : 128;
        const double sp = 0.7 + 0.1 * (t % 3);
        const CsrMatrix pattern = gen_pattern(m, k, sp, rng());
        const CsrMatrix a = randomized(pattern, rng());
        const DenseMatrix c = gen_dense(m, n, rng());
        const DenseMatrix b = gen_dense(k, n, rng());
        const DenseMatrix d = gen_dense(k, n, rng());

        const auto sddmm_expected = dense_sddmm_oracle(c, b, pattern);
        const auto spmm_expected = dense_spmm_oracle(csr_to_dense(a), b);
        const auto fused_expected = fused_oracle(c, b, d, pattern);

        for (std::size_t vlc : {8, 64}) {
            for (std::size_t nt : {1, 4}) {
                KernelConfig config{vlc, nt, 0, false};
                INFO("m=", m, " k=", k, " n=", n, " sp=", sp, " vlc=", vlc, " nt=", nt);
                CHECK(compare(sddmm(pattern, c, b, config), sddmm_expected).pass);
                CHECK(compare(sddmm(pattern, c, b, config),
                              sddmm_reference(pattern, c, b)).pass);
            }
            KernelConfig config{vlc, 1, 0, false};
            CHECK(compare(spmm(a, b, config), spmm_expected).pass);
            CHECK(compare(fusedmm(pattern, c, b, d, config), fused_expected).pass);
        }
    }
}

TEST_CASE("tail cases where nnzr is not a multiple of nt*vlc") {
    // 300 nonzeros per row: not a multiple of 32, nor of 4*32
    const CsrMatrix pattern = gen_pattern(37, 1000, 0.7, 21);
    REQUIRE(pattern.row_ptr[1] == 300);
    const CsrMatrix a = randomized(pattern, 22);
    const DenseMatrix c = gen_dense(37, 32, 23);
    const DenseMatrix b = gen_dense(1000, 32, 24);
    const DenseMatrix d = gen_dense(1000, 32, 25);

    KernelConfig config{32, 4, 0, false};
    CHECK(compare(sddmm(pattern, c, b, config), dense_sddmm_oracle(c, b, pattern)).pass);
    KernelConfig row_config{32, 1, 0, false};
    CHECK(compare(spmm(a, b, row_config), dense_spmm_oracle(csr_to_dense(a), b)).pass);
    CHECK(compare(fusedmm(pattern, c, b, d, row_config), fused_oracle(c, b, d, pattern)).pass);

    // share count exceeding nnzr in some rows
    const CsrMatrix tiny = gen_pattern(9, 40, 0.9, 26);  // 4 nonzeros per row
    const DenseMatrix tc = gen_dense(9, 32, 27);
    const DenseMatrix tb = gen_dense(40, 32, 28);
    KernelConfig wide{8, 16, 0, false};
    CHECK(compare(sddmm(tiny, tc, tb, wide), dense_sddmm_oracle(tc, tb, tiny)).pass);
}

TEST_CASE("results are bitwise independent of workers and prefetch") {
    const CsrMatrix pattern = gen_pattern(96, 80, 0.8, 31);
    const CsrMatrix a = randomized(pattern, 32);
    const DenseMatrix c = gen_dense(96, 128, 33);
    const DenseMatrix b = gen_dense(80, 128, 34);
    const DenseMatrix d = gen_dense(80, 128, 35);

    const std::size_t max_workers = resolve_workers(0);
    KernelConfig base{32, 2, 1, false};
    const auto sd = sddmm(pattern, c, b, base);
    const auto sp = spmm(a, b, KernelConfig{32, 1, 1, false});
    const auto fu = fusedmm(pattern, c, b, d, KernelConfig{32, 1, 1, false});
    for (std::size_t workers : {std::size_t{2}, max_workers}) {
        for (bool prefetch : {false, true}) {
            CHECK(sddmm(pattern, c, b, KernelConfig{32, 2, workers, prefetch}) == sd);
            CHECK(spmm(a, b, KernelConfig{32, 1, workers, prefetch}).data == sp.data);
            CHECK(fusedmm(pattern, c, b, d, KernelConfig{32, 1, workers, prefetch}).data ==
                  fu.data);
        }
    }
}

TEST_CASE("linearity spot checks") {
    const CsrMatrix pattern = gen_pattern(48, 56, 0.75, 41);
    const DenseMatrix c = gen_dense(48, 32, 42);
    const DenseMatrix b1 = gen_dense(56, 32, 43);
    const DenseMatrix b2 = gen_dense(56, 32, 44);

    DenseMatrix c2 = c;
    for (float& v : c2.data) v *= 2.0f;
    auto doubled = sddmm(pattern, c, b1);
    for (float& v : doubled) v *= 2.0f;
    CHECK(compare(sddmm(pattern, c2, b1), doubled).pass);

    const CsrMatrix a = randomized(pattern, 45);
    DenseMatrix bsum = b1;
    for (index_t i = 0; i < bsum.data.size(); ++i) bsum.data[i] += b2.data[i];
    DenseMatrix csum = spmm(a, b1);
    const DenseMatrix cb2 = spmm(a, b2);
    for (index_t i = 0; i < csum.data.size(); ++i) csum.data[i] += cb2.data[i];
    CHECK(compare(spmm(a, bsum), csum).pass);
}

TEST_CASE("fusedmm equals spmm composed with sddmm") {
    std::mt19937_64 rng(55);
    for (int t = 0; t < 4; ++t) {
        const index_t m = 24 + rng() % 100;
        const index_t k = 24 + rng() % 100;
        const index_t n = (t % 2 == 0) ? 32 : 128;
        CsrMatrix pattern = gen_pattern(m, k, 0.8, rng());
        const DenseMatrix c = gen_dense(m, n, rng());
        const DenseMatrix b = gen_dense(k, n, rng());
        const DenseMatrix d = gen_dense(k, n, rng());
        CsrMatrix intermediate = pattern;
        intermediate.values = sddmm(pattern, c, b);
        CHECK(compare(fusedmm(pattern, c, b, d), spmm(intermediate, d)).pass);
    }
}

TEST_CASE("shape and config errors") {
    const CsrMatrix pattern = gen_pattern(8, 8, 0.5, 1);
    const DenseMatrix good(8, 32);
    CHECK_THROWS_AS(sddmm(pattern, DenseMatrix(7, 32), good), ShapeMismatchError);
    CHECK_THROWS_AS(sddmm(pattern, good, DenseMatrix(8, 16)), ShapeMismatchError);
    CHECK_THROWS_AS(spmm(pattern, DenseMatrix(9, 32)), ShapeMismatchError);
    CHECK_THROWS_AS(fusedmm(pattern, good, good, DenseMatrix(7, 32)), ShapeMismatchError);
    CHECK_THROWS_AS(fusedmm(pattern, good, good, good, KernelConfig{32, 2, 0, false}),
                    InvalidConfigError);
    CHECK_THROWS_AS(sddmm(pattern, good, good, KernelConfig{12, 1, 0, false}),
                    InvalidConfigError);
    CHECK_THROWS_AS(sddmm(pattern, good, good, KernelConfig{32, 32, 0, false}),
                    InvalidConfigError);
}

TEST_CASE("non-fast-path N agrees with the reference") {
    const CsrMatrix pattern = gen_pattern(12, 20, 0.6, 61);
    const DenseMatrix c = gen_dense(12, 48, 62);
    const DenseMatrix b = gen_dense(20, 48, 63);
    CHECK(sddmm(pattern, c, b) == sddmm_reference(pattern, c, b));
}
