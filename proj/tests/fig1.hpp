#pragma once

#include <vector>

#include "sparsemm/csr.hpp"

// The worked 5x4 example used throughout the tests.
namespace testdata {

inline std::vector<sparsemm::Triplet> fig1_triplets() {
    return {
        {0, 2, 1.0f}, {0, 3, 2.0f}, {1, 2, 3.0f}, {2, 0, 4.0f}, {2, 1, 5.0f},
        {3, 0, 6.0f}, {4, 0, 7.0f}, {4, 2, 8.0f}, {4, 3, 9.0f},
    };
}

inline sparsemm::CsrMatrix fig1_csr() {
    return sparsemm::build_csr(fig1_triplets(), 5, 4);
}

inline const std::vector<sparsemm::index_t> fig1_row_ptr = {0, 2, 3, 5, 6, 9};
inline const std::vector<sparsemm::index_t> fig1_col_idx = {2, 3, 2, 0, 1, 0, 0, 2, 3};
inline const std::vector<float> fig1_values = {1, 2, 3, 4, 5, 6, 7, 8, 9};

}  // namespace testdata
