#include "sparsemm/bench.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "sparsemm/errors.hpp"
#include "sparsemm/oracle.hpp"

namespace sparsemm {

std::string to_string(Op op) {
    switch (op) {
        case Op::sddmm: return "sddmm";
        case Op::spmm: return "spmm";
        case Op::fusedmm: return "fusedmm";
    }
    return "?";
}

std::string to_string(Impl impl) {
    return impl == Impl::reference ? "reference" : "vectorized";
}

std::optional<Op> parse_op(const std::string& s) {
    if (s == "sddmm") return Op::sddmm;
    if (s == "spmm") return Op::spmm;
    if (s == "fusedmm") return Op::fusedmm;
    return std::nullopt;
}

std::optional<Impl> parse_impl(const std::string& s) {
    if (s == "reference") return Impl::reference;
    if (s == "vectorized") return Impl::vectorized;
    return std::nullopt;
}

std::uint64_t flops_of(Op op, std::size_t nnz, std::size_t n) {
    const std::uint64_t base = 2ull * nnz * n;
    return op == Op::fusedmm ? 2 * base : base;
}

std::pair<double, double> arithmetic_intensity_bounds(std::size_t m, std::size_t k,
                                                      std::size_t n, std::size_t nnz) {
    const double flops = static_cast<double>(flops_of(Op::sddmm, nnz, n));
    const double dn = static_cast<double>(n);
    const double dnnz = static_cast<double>(nnz);
    const double bytes_worst = 4.0 * dn * dnnz + 4.0 * dnnz + 4.0 * dnnz;
    const double bytes_best =
        4.0 * (static_cast<double>(m) * dn + static_cast<double>(k) * dn + 2.0 * dnnz +
               static_cast<double>(m) + 1.0);
    return {flops / bytes_worst, flops / bytes_best};
}

namespace {

struct CaseInputs {
    CsrMatrix pattern;
    DenseMatrix c;  // M x N
    DenseMatrix b;  // K x N
    DenseMatrix d;  // K x N
};

CaseInputs make_inputs(Op op, const BenchmarkCase& bc) {
    CaseInputs in;
    in.pattern = gen_pattern(bc.m, bc.k, bc.sparsity, bc.seed);
    in.b = gen_dense(bc.k, bc.n, bc.seed + 1);
    if (op != Op::spmm) in.c = gen_dense(bc.m, bc.n, bc.seed + 2);
    if (op == Op::fusedmm) in.d = gen_dense(bc.k, bc.n, bc.seed + 3);
    return in;
}

void run_once(Op op, Impl impl, const CaseInputs& in, const KernelConfig& config) {
    switch (op) {
        case Op::sddmm:
            impl == Impl::reference ? (void)sddmm_reference(in.pattern, in.c, in.b, config)
                                    : (void)sddmm(in.pattern, in.c, in.b, config);
            break;
        case Op::spmm:
            impl == Impl::reference ? (void)spmm_reference(in.pattern, in.b, config)
                                    : (void)spmm(in.pattern, in.b, config);
            break;
        case Op::fusedmm:
            impl == Impl::reference
                ? (void)fusedmm_reference(in.pattern, in.c, in.b, in.d, config)
                : (void)fusedmm(in.pattern, in.c, in.b, in.d, config);
            break;
    }
}

}  // namespace

BenchResult time_kernel(Op op, Impl impl, const BenchmarkCase& bench_case,
                        const KernelConfig& config, std::size_t iterations) {
    if (iterations < 1) throw InvalidConfigError("iterations must be >= 1");
    BenchResult result;
    result.bench_case = bench_case;
    result.op = op;
    result.impl = impl;
    result.config = config;
    result.iterations = iterations;

    const CaseInputs inputs = make_inputs(op, bench_case);
    result.nnz = inputs.pattern.nnz();
    result.flops = flops_of(op, result.nnz, bench_case.n);
    std::tie(result.ai_worst, result.ai_best) = arithmetic_intensity_bounds(
        bench_case.m, bench_case.k, bench_case.n, result.nnz);

    run_once(op, impl, inputs, config);  // warm-up, untimed

    using clock = std::chrono::steady_clock;
    result.all_times.reserve(iterations);
    for (std::size_t it = 0; it < iterations; ++it) {
        const auto t0 = clock::now();
        run_once(op, impl, inputs, config);
        const auto t1 = clock::now();
        result.all_times.push_back(std::chrono::duration<double>(t1 - t0).count());
    }
    result.min_time = *std::min_element(result.all_times.begin(), result.all_times.end());
    result.gflops_per_s = static_cast<double>(result.flops) / result.min_time / 1e9;
    return result;
}

KernelConfig default_config_policy(const BenchmarkCase& bench_case, Op op) {
    KernelConfig config;
    config.vlc = 32;
    config.nt = op == Op::sddmm ? select_nt(bench_case.m) : 1;
    return config;
}

std::vector<BenchResult> run_grid(const std::vector<BenchmarkCase>& grid,
                                  const std::vector<Op>& ops, Impl impl,
                                  std::size_t iterations, const ConfigPolicy& policy,
                                  std::ostream* progress) {
    std::vector<BenchResult> results;
    results.reserve(grid.size() * ops.size());
    for (const BenchmarkCase& bc : grid) {
        for (Op op : ops) {
            const KernelConfig config = policy(bc, op);
            try {
                results.push_back(time_kernel(op, impl, bc, config, iterations));
            } catch (const std::exception& ex) {
                BenchResult failed;
                failed.bench_case = bc;
                failed.op = op;
                failed.impl = impl;
                failed.config = config;
                failed.iterations = iterations;
                failed.status = ex.what();
                results.push_back(std::move(failed));
            }
            if (progress) {
                const BenchResult& r = results.back();
                *progress << to_string(r.op) << " " << bc.m << "x" << bc.k << " n=" << bc.n
                          << " sp=" << bc.sparsity << ": "
                          << (r.status == "ok" ? std::to_string(r.gflops_per_s) + " Gflops/s"
                                               : r.status)
                          << "\n";
            }
        }
    }
    return results;
}

namespace {

// RFC 4180: quote fields containing commas, quotes, or newlines.
std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string quoted = "\"";
    for (char ch : s) {
        if (ch == '"') quoted += '"';
        quoted += ch;
    }
    quoted += '"';
    return quoted;
}

std::string fmt_double(double v) {
    std::ostringstream os;
    os.precision(9);
    os << v;
    return os.str();
}

}  // namespace

void report_csv(const std::vector<BenchResult>& results, std::ostream& os,
                bool with_status) {
    os << "op,impl,M,K,N,sparsity,nnz,vlc,nt,workers,iters,min_time_s,gflops,ai_worst,"
          "ai_best";
    if (with_status) os << ",status";
    os << "\n";
    for (const BenchResult& r : results) {
        os << to_string(r.op) << "," << to_string(r.impl) << "," << r.bench_case.m << ","
           << r.bench_case.k << "," << r.bench_case.n << "," << r.bench_case.sparsity << ","
           << r.nnz << "," << r.config.vlc << "," << r.config.nt << "," << r.config.workers
           << "," << r.iterations << "," << fmt_double(r.min_time) << ","
           << fmt_double(r.gflops_per_s) << "," << fmt_double(r.ai_worst) << ","
           << fmt_double(r.ai_best);
        if (with_status) os << "," << csv_field(r.status);
        os << "\n";
    }
}

void report_csv(const std::vector<BenchResult>& results, const std::filesystem::path& path,
                bool with_status) {
    std::ofstream os(path);
    if (!os) throw IoError("cannot open for writing: " + path.string());
    report_csv(results, os, with_status);
    if (!os) throw IoError("write failed: " + path.string());
}

void report_json(const std::vector<BenchResult>& results, std::ostream& os,
                 bool with_status) {
    nlohmann::json rows = nlohmann::json::array();
    for (const BenchResult& r : results) {
        nlohmann::json row{
            {"op", to_string(r.op)},
            {"impl", to_string(r.impl)},
            {"M", r.bench_case.m},
            {"K", r.bench_case.k},
            {"N", r.bench_case.n},
            {"sparsity", r.bench_case.sparsity},
            {"nnz", r.nnz},
            {"vlc", r.config.vlc},
            {"nt", r.config.nt},
            {"workers", r.config.workers},
            {"iters", r.iterations},
            {"min_time_s", r.min_time},
            {"gflops", r.gflops_per_s},
            {"ai_worst", r.ai_worst},
            {"ai_best", r.ai_best},
        };
        if (with_status) row["status"] = r.status;
        rows.push_back(std::move(row));
    }
    os << rows.dump(2) << "\n";
}

}  // namespace sparsemm
