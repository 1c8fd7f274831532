#include "sparsemm/csr.hpp"

#include <algorithm>

namespace sparsemm {

CsrMatrix build_csr(std::vector<Triplet> triplets, index_t rows, index_t cols) {
    for (const Triplet& t : triplets) {
        if (t.row >= rows || t.col >= cols) {
            throw OutOfBoundsError("triplet (" + std::to_string(t.row) + "," +
                                   std::to_string(t.col) + ") outside " +
                                   std::to_string(rows) + "x" + std::to_string(cols));
        }
    }
    std::sort(triplets.begin(), triplets.end(), [](const Triplet& a, const Triplet& b) {
        return a.row != b.row ? a.row < b.row : a.col < b.col;
    });
    for (index_t i = 1; i < triplets.size(); ++i) {
        if (triplets[i].row == triplets[i - 1].row && triplets[i].col == triplets[i - 1].col) {
            throw DuplicateEntryError("duplicate coordinate (" + std::to_string(triplets[i].row) +
                                      "," + std::to_string(triplets[i].col) + ")");
        }
    }

    CsrMatrix a;
    a.rows = rows;
    a.cols = cols;
    a.row_ptr.assign(rows + 1, 0);
    a.col_idx.reserve(triplets.size());
    a.values.reserve(triplets.size());
    for (const Triplet& t : triplets) {
        a.row_ptr[t.row + 1]++;
        a.col_idx.push_back(t.col);
        a.values.push_back(t.value);
    }
    for (index_t i = 0; i < rows; ++i) {
        a.row_ptr[i + 1] += a.row_ptr[i];
    }
    return a;
}

DenseMatrix csr_to_dense(const CsrMatrix& a) {
    DenseMatrix d(a.rows, a.cols);
    for (index_t i = 0; i < a.rows; ++i) {
        for (index_t p = a.row_ptr[i]; p < a.row_ptr[i + 1]; ++p) {
            d.at(i, a.col_idx[p]) = a.values[p];
        }
    }
    return d;
}

CsrMatrix dense_to_csr(const DenseMatrix& d) {
    CsrMatrix a;
    a.rows = d.rows;
    a.cols = d.cols;
    a.row_ptr.assign(d.rows + 1, 0);
    for (index_t i = 0; i < d.rows; ++i) {
        for (index_t j = 0; j < d.cols; ++j) {
            const float v = d.at(i, j);
            if (v != 0.0f) {
                a.col_idx.push_back(j);
                a.values.push_back(v);
            }
        }
        a.row_ptr[i + 1] = a.col_idx.size();
    }
    return a;
}

std::vector<std::string> validate(const CsrMatrix& a) {
    std::vector<std::string> report;
    if (a.row_ptr.size() != a.rows + 1) {
        report.push_back("row_ptr length " + std::to_string(a.row_ptr.size()) +
                         ", expected rows+1 = " + std::to_string(a.rows + 1));
        return report;  // remaining checks assume a well-sized row_ptr
    }
    if (!a.row_ptr.empty() && a.row_ptr.front() != 0) {
        report.push_back("row_ptr[0] != 0");
    }
    for (index_t i = 0; i + 1 < a.row_ptr.size(); ++i) {
        if (a.row_ptr[i + 1] < a.row_ptr[i]) {
            report.push_back("row_ptr not non-decreasing at row " + std::to_string(i));
        }
    }
    if (a.row_ptr.back() != a.col_idx.size()) {
        report.push_back("row_ptr[rows] != nnz");
    }
    if (a.values.size() != a.col_idx.size()) {
        report.push_back("values length != col_idx length");
    }
    for (index_t p = 0; p < a.col_idx.size(); ++p) {
        if (a.col_idx[p] >= a.cols) {
            report.push_back("column index out of range at position " + std::to_string(p));
        }
    }
    for (index_t i = 0; i + 1 < a.row_ptr.size(); ++i) {
        const index_t lo = std::min(a.row_ptr[i], static_cast<index_t>(a.col_idx.size()));
        const index_t hi = std::min(a.row_ptr[i + 1], static_cast<index_t>(a.col_idx.size()));
        for (index_t p = lo + 1; p < hi; ++p) {
            if (a.col_idx[p] <= a.col_idx[p - 1]) {
                report.push_back("column indices not strictly increasing in row " +
                                 std::to_string(i));
                break;
            }
        }
    }
    return report;
}

}  // namespace sparsemm
