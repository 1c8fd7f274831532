#include <algorithm>
#include <cmath>

#include <doctest.h>

#include "sparsemm/workload.hpp"

using namespace sparsemm;

TEST_CASE("gen_pattern gives each row the exact nonzero count") {
    const CsrMatrix a = gen_pattern(4, 10, 0.7, 42);
    CHECK(a.nnz() == 12);
    for (index_t i = 0; i < 4; ++i) {
        CHECK(a.row_ptr[i + 1] - a.row_ptr[i] == 3);
    }
    CHECK(validate(a).empty());
}

TEST_CASE("gen_pattern with zero sparsity is fully dense") {
    const CsrMatrix a = gen_pattern(3, 5, 0.0, 7);
    CHECK(a.nnz() == 15);
    for (index_t i = 0; i < 3; ++i) {
        for (index_t j = 0; j < 5; ++j) {
            CHECK(a.col_idx[i * 5 + j] == j);
        }
    }
}

TEST_CASE("gen_pattern determinism and validity across seeds") {
    for (std::uint64_t seed : {0ull, 1ull, 0xdeadbeefull}) {
        const CsrMatrix a = gen_pattern(17, 31, 0.85, seed);
        const CsrMatrix b = gen_pattern(17, 31, 0.85, seed);
        CHECK(a == b);
        CHECK(validate(a).empty());
        CHECK(a.nnz() == 17 * row_nnz(31, 0.85));
        CHECK(std::all_of(a.values.begin(), a.values.end(),
                          [](float v) { return v == 1.0f; }));
    }
    CHECK(gen_pattern(4, 8, 0.5, 1) != gen_pattern(4, 8, 0.5, 2));
}

TEST_CASE("gen_pattern rejects degenerate rows") {
    CHECK_THROWS_AS(gen_pattern(2, 10, 0.99, 0), DegenerateRowError);
}

TEST_CASE("gen_dense range, determinism and mean") {
    const DenseMatrix d = gen_dense(1000, 1000, 5);
    CHECK(gen_dense(1000, 1000, 5) == d);
    double sum = 0.0;
    for (float v : d.data) {
        CHECK(v >= -1.0f);
        CHECK(v <= 1.0f);
        sum += v;
    }
    CHECK(std::abs(sum / static_cast<double>(d.data.size())) < 0.01);
}

TEST_CASE("full grid structure") {
    const auto grid = full_grid();
    CHECK(grid.size() == 72);
    const auto has = [&grid](index_t m, index_t k, index_t n, double sp) {
        return std::any_of(grid.begin(), grid.end(), [&](const BenchmarkCase& bc) {
            return bc.m == m && bc.k == k && bc.n == n && bc.sparsity == sp;
        });
    };
    CHECK(has(8192, 8192, 128, 0.7));
    CHECK(has(32768, 8192, 32, 0.9));
    CHECK(has(1024, 1024, 32, 0.8));
    for (const BenchmarkCase& bc : grid) {
        CHECK((bc.n == 32 || bc.n == 128));
        CHECK(bc.seed == case_seed(bc.m, bc.k, bc.n, bc.sparsity));
    }
}

TEST_CASE("scaled grid divides M and K only") {
    const auto full = full_grid();
    CHECK(scaled_grid(1) == full);
    const auto scaled = scaled_grid(8);
    REQUIRE(scaled.size() == 72);
    for (std::size_t i = 0; i < 72; ++i) {
        CHECK(scaled[i].m == std::max<index_t>(full[i].m / 8, 64));
        CHECK(scaled[i].k == std::max<index_t>(full[i].k / 8, 64));
        CHECK(scaled[i].n == full[i].n);
        CHECK(scaled[i].sparsity == full[i].sparsity);
    }
    CHECK_THROWS_AS(scaled_grid(3), InvalidConfigError);
    CHECK_THROWS_AS(scaled_grid(2048), InvalidConfigError);
}
