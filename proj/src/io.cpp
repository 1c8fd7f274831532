#include "sparsemm/io.hpp"

#include <cstdint>
#include <fstream>
#include <limits>
#include <sstream>

namespace sparsemm {

namespace {

void write_u64(std::ostream& os, std::uint64_t v) {
    unsigned char buf[8];
    for (int i = 0; i < 8; ++i) buf[i] = static_cast<unsigned char>(v >> (8 * i));
    os.write(reinterpret_cast<const char*>(buf), 8);
}

std::uint64_t read_u64(std::istream& is) {
    unsigned char buf[8];
    is.read(reinterpret_cast<char*>(buf), 8);
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(buf[i]) << (8 * i);
    return v;
}

std::ofstream open_out(const std::filesystem::path& path, std::ios::openmode mode) {
    std::ofstream os(path, mode);
    if (!os) throw IoError("cannot open for writing: " + path.string());
    return os;
}

std::ifstream open_in(const std::filesystem::path& path, std::ios::openmode mode) {
    std::ifstream is(path, mode);
    if (!is) throw IoError("cannot open for reading: " + path.string());
    return is;
}

}  // namespace

void write_matrix_market(const CsrMatrix& a, std::ostream& os) {
    os << "%%MatrixMarket matrix coordinate real general\n";
    os << a.rows << " " << a.cols << " " << a.nnz() << "\n";
    os.precision(std::numeric_limits<float>::max_digits10);
    for (index_t i = 0; i < a.rows; ++i) {
        for (index_t p = a.row_ptr[i]; p < a.row_ptr[i + 1]; ++p) {
            os << i + 1 << " " << a.col_idx[p] + 1 << " " << a.values[p] << "\n";
        }
    }
}

void write_matrix_market(const CsrMatrix& a, const std::filesystem::path& path) {
    auto os = open_out(path, std::ios::out);
    write_matrix_market(a, os);
    if (!os) throw IoError("write failed: " + path.string());
}

CsrMatrix read_matrix_market(std::istream& is) {
    std::string line;
    if (!std::getline(is, line)) throw IoError("empty Matrix Market stream");
    if (line.rfind("%%MatrixMarket", 0) != 0 ||
        line.find("coordinate") == std::string::npos ||
        line.find("real") == std::string::npos ||
        line.find("general") == std::string::npos) {
        throw IoError("unsupported Matrix Market header: " + line);
    }
    while (std::getline(is, line)) {
        if (!line.empty() && line[0] != '%') break;
    }
    std::istringstream sizes(line);
    std::uint64_t rows = 0, cols = 0, nnz = 0;
    if (!(sizes >> rows >> cols >> nnz)) throw IoError("bad Matrix Market size line");

    std::vector<Triplet> triplets;
    triplets.reserve(nnz);
    for (std::uint64_t e = 0; e < nnz; ++e) {
        std::uint64_t r = 0, c = 0;
        double v = 0.0;
        if (!(is >> r >> c >> v)) throw IoError("truncated Matrix Market entries");
        if (r < 1 || c < 1) throw IoError("Matrix Market indices are 1-based");
        triplets.push_back({static_cast<index_t>(r - 1), static_cast<index_t>(c - 1),
                            static_cast<float>(v)});
    }
    return build_csr(std::move(triplets), rows, cols);
}

CsrMatrix read_matrix_market(const std::filesystem::path& path) {
    auto is = open_in(path, std::ios::in);
    return read_matrix_market(is);
}

void write_csr_binary(const CsrMatrix& a, const std::filesystem::path& path) {
    auto os = open_out(path, std::ios::binary);
    write_u64(os, a.rows);
    write_u64(os, a.cols);
    write_u64(os, a.nnz());
    for (index_t v : a.row_ptr) write_u64(os, v);
    for (index_t v : a.col_idx) write_u64(os, v);
    os.write(reinterpret_cast<const char*>(a.values.data()),
             static_cast<std::streamsize>(a.values.size() * sizeof(float)));
    if (!os) throw IoError("write failed: " + path.string());
}

CsrMatrix read_csr_binary(const std::filesystem::path& path) {
    auto is = open_in(path, std::ios::binary);
    CsrMatrix a;
    a.rows = static_cast<index_t>(read_u64(is));
    a.cols = static_cast<index_t>(read_u64(is));
    const std::uint64_t nnz = read_u64(is);
    a.row_ptr.resize(a.rows + 1);
    for (auto& v : a.row_ptr) v = static_cast<index_t>(read_u64(is));
    a.col_idx.resize(nnz);
    for (auto& v : a.col_idx) v = static_cast<index_t>(read_u64(is));
    a.values.resize(nnz);
    is.read(reinterpret_cast<char*>(a.values.data()),
            static_cast<std::streamsize>(nnz * sizeof(float)));
    if (!is) throw IoError("truncated binary CSR file: " + path.string());
    return a;
}

void write_dense_binary(const DenseMatrix& d, const std::filesystem::path& path) {
    auto os = open_out(path, std::ios::binary);
    write_u64(os, d.rows);
    write_u64(os, d.cols);
    os.write(reinterpret_cast<const char*>(d.data.data()),
             static_cast<std::streamsize>(d.data.size() * sizeof(float)));
    if (!os) throw IoError("write failed: " + path.string());
}

DenseMatrix read_dense_binary(const std::filesystem::path& path) {
    auto is = open_in(path, std::ios::binary);
    DenseMatrix d;
    d.rows = static_cast<index_t>(read_u64(is));
    d.cols = static_cast<index_t>(read_u64(is));
    d.data.resize(d.rows * d.cols);
    is.read(reinterpret_cast<char*>(d.data.data()),
            static_cast<std::streamsize>(d.data.size() * sizeof(float)));
    if (!is) throw IoError("truncated binary dense file: " + path.string());
    return d;
}

}  // namespace sparsemm
