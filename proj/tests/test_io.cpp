#include <filesystem>
#include <sstream>

#include <doctest.h>

#include "sparsemm/io.hpp"
#include "sparsemm/workload.hpp"
#include "tests/fig1.hpp"

using namespace sparsemm;

namespace {

std::filesystem::path temp_file(const char* name) {
    return std::filesystem::temp_directory_path() / name;
}

}  // namespace

TEST_CASE("matrix market round trip") {
    std::ostringstream os;
    write_matrix_market(testdata::fig1_csr(), os);
    const std::string text = os.str();
    CHECK(text.rfind("%%MatrixMarket matrix coordinate real general\n", 0) == 0);
    CHECK(text.find("5 4 9") != std::string::npos);
    CHECK(text.find("1 3 1") != std::string::npos);  // 1-based (0,2) entry

    std::istringstream is(text);
    CHECK(read_matrix_market(is) == testdata::fig1_csr());
}

TEST_CASE("matrix market round trip on generated values") {
    CsrMatrix a = gen_pattern(20, 33, 0.8, 9);
    a.values = gen_dense(1, a.nnz(), 10).data;
    std::ostringstream os;
    write_matrix_market(a, os);
    std::istringstream is(os.str());
    CHECK(read_matrix_market(is) == a);
}

TEST_CASE("matrix market rejects foreign headers") {
    std::istringstream empty("");
    CHECK_THROWS_AS(read_matrix_market(empty), IoError);
    std::istringstream wrong("%%MatrixMarket matrix array real general\n1 1\n1.0\n");
    CHECK_THROWS_AS(read_matrix_market(wrong), IoError);
    std::istringstream truncated(
        "%%MatrixMarket matrix coordinate real general\n2 2 2\n1 1 1.0\n");
    CHECK_THROWS_AS(read_matrix_market(truncated), IoError);
}

TEST_CASE("binary csr round trip") {
    const auto path = temp_file("sparsemm_test_csr.bin");
    CsrMatrix a = gen_pattern(15, 40, 0.9, 4);
    a.values = gen_dense(1, a.nnz(), 5).data;
    write_csr_binary(a, path);
    CHECK(read_csr_binary(path) == a);
    CHECK(std::filesystem::file_size(path) ==
          3 * 8 + (a.rows + 1) * 8 + a.nnz() * 8 + a.nnz() * 4);
    std::filesystem::remove(path);
}

TEST_CASE("binary dense round trip") {
    const auto path = temp_file("sparsemm_test_dense.bin");
    const DenseMatrix d = gen_dense(7, 13, 6);
    write_dense_binary(d, path);
    CHECK(read_dense_binary(path) == d);
    std::filesystem::remove(path);
}

TEST_CASE("missing files raise IoError") {
    CHECK_THROWS_AS(read_csr_binary("/nonexistent/sparsemm.bin"), IoError);
    CHECK_THROWS_AS(read_matrix_market(std::filesystem::path("/nonexistent/a.mtx")), IoError);
}
