#include "sparsemm/workload.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "sparsemm/errors.hpp"

namespace sparsemm {

namespace detail {

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

}  // namespace detail

namespace {

std::uint64_t mix(std::uint64_t a, std::uint64_t b) {
    std::uint64_t s = a ^ (b + 0x9e3779b97f4a7c15ull + (a << 6) + (a >> 2));
    return detail::splitmix64(s);
}

float unit_float(std::uint64_t bits) {
    // top 53 bits -> double in [0,1), mapped to [-1,1)
    const double u = static_cast<double>(bits >> 11) * 0x1.0p-53;
    return static_cast<float>(2.0 * u - 1.0);
}

}  // namespace

index_t row_nnz(index_t k, double sparsity) {
    return static_cast<index_t>(std::llround(static_cast<double>(k) * (1.0 - sparsity)));
}

CsrMatrix gen_pattern(index_t m, index_t k, double sparsity, std::uint64_t seed) {
    const index_t r = row_nnz(k, sparsity);
    if (r < 1) {
        throw DegenerateRowError("sparsity " + std::to_string(sparsity) + " leaves rows of " +
                                 std::to_string(k) + " columns empty");
    }

    CsrMatrix a;
    a.rows = m;
    a.cols = k;
    a.row_ptr.resize(m + 1);
    a.col_idx.resize(m * r);
    a.values.assign(m * r, 1.0f);

    std::vector<index_t> deck(k);
    for (index_t i = 0; i < m; ++i) {
        a.row_ptr[i] = i * r;
        std::iota(deck.begin(), deck.end(), index_t{0});
        std::uint64_t state = mix(seed, i);
        // partial Fisher-Yates: first r entries are a uniform sample
        // without replacement
        for (index_t j = 0; j < r; ++j) {
            const index_t pick = j + detail::splitmix64(state) % (k - j);
            std::swap(deck[j], deck[pick]);
        }
        std::sort(deck.begin(), deck.begin() + r);
        std::copy(deck.begin(), deck.begin() + r, a.col_idx.begin() + i * r);
    }
    a.row_ptr[m] = m * r;
    return a;
}

DenseMatrix gen_dense(index_t rows, index_t cols, std::uint64_t seed) {
    if (rows < 1 || cols < 1) {
        throw ShapeMismatchError("gen_dense requires positive dimensions");
    }
    DenseMatrix d(rows, cols);
    std::uint64_t base = seed;
    base = detail::splitmix64(base);
    for (index_t i = 0; i < d.data.size(); ++i) {
        std::uint64_t ctr = base + i;
        d.data[i] = unit_float(detail::splitmix64(ctr));
    }
    return d;
}

std::uint64_t case_seed(index_t m, index_t k, index_t n, double sparsity) {
    const auto pct = static_cast<std::uint64_t>(std::llround(100.0 * sparsity));
    return mix(mix(m, k), mix(n, pct));
}

namespace {

std::vector<BenchmarkCase> make_grid(index_t div) {
    constexpr index_t kUnit = 1024;
    static constexpr std::pair<index_t, index_t> shapes[] = {
        {1, 1}, {3, 1}, {4, 1}, {2, 2}, {6, 2}, {8, 2},
        {4, 4}, {12, 4}, {16, 4}, {8, 8}, {24, 8}, {32, 8},
    };
    static constexpr double sparsities[] = {0.7, 0.8, 0.9};
    static constexpr index_t ns[] = {32, 128};

    std::vector<BenchmarkCase> grid;
    grid.reserve(72);
    for (const auto& [ms, ks] : shapes) {
        for (double sp : sparsities) {
            for (index_t n : ns) {
                const index_t m = std::max<index_t>(ms * kUnit / div, 64);
                const index_t k = std::max<index_t>(ks * kUnit / div, 64);
                grid.push_back({m, k, n, sp, case_seed(m, k, n, sp)});
            }
        }
    }
    return grid;
}

}  // namespace

std::vector<BenchmarkCase> full_grid() { return make_grid(1); }

std::vector<BenchmarkCase> scaled_grid(index_t scale_divisor) {
    if (scale_divisor == 0 || 1024 % scale_divisor != 0 ||
        (scale_divisor & (scale_divisor - 1)) != 0) {
        throw InvalidConfigError("scale divisor must be a power of two dividing 1024");
    }
    return make_grid(scale_divisor);
}

}  // namespace sparsemm
