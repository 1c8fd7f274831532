#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sparsemm/bench.hpp"
#include "sparsemm/csr.hpp"
#include "sparsemm/errors.hpp"
#include "sparsemm/io.hpp"
#include "sparsemm/kernels.hpp"
#include "sparsemm/oracle.hpp"
#include "sparsemm/workload.hpp"

namespace {

using namespace sparsemm;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

// Sizes accept a "1k" suffix meaning multiples of 1024.
std::size_t parse_size(const std::string& text) {
    std::string digits = text;
    std::size_t unit = 1;
    if (!digits.empty() && (digits.back() == 'k' || digits.back() == 'K')) {
        digits.pop_back();
        unit = 1024;
    }
    std::size_t pos = 0;
    const unsigned long long v = std::stoull(digits, &pos);
    if (pos != digits.size()) throw CLI::ValidationError("not a size: " + text);
    return static_cast<std::size_t>(v) * unit;
}

struct CaseArgs {
    std::string m_text = "1k";
    std::string k_text = "1k";
    std::string n_text = "32";
    double sparsity = 0.7;
    std::uint64_t seed = 0;
    CLI::Option* seed_opt = nullptr;

    BenchmarkCase to_case() const {
        BenchmarkCase bc;
        bc.m = parse_size(m_text);
        bc.k = parse_size(k_text);
        bc.n = parse_size(n_text);
        bc.sparsity = sparsity;
        const bool seed_given = seed_opt != nullptr && seed_opt->count() > 0;
        bc.seed = seed_given ? seed : case_seed(bc.m, bc.k, bc.n, bc.sparsity);
        if (bc.sparsity < 0.0 || bc.sparsity >= 1.0) {
            throw CLI::ValidationError("--sparsity must lie in [0, 1)");
        }
        if (bc.m < 1 || bc.k < 1 || bc.n < 1) {
            throw CLI::ValidationError("sizes must be positive");
        }
        if (row_nnz(bc.k, bc.sparsity) < 1) {
            throw CLI::ValidationError("sparsity leaves rows empty");
        }
        return bc;
    }
};

struct ConfigArgs {
    std::size_t vlc = 32;
    std::size_t nt = 0;  // 0 = auto: select_nt(M) for sddmm, 1 otherwise
    std::size_t workers = 0;
    bool prefetch = false;

    KernelConfig to_config(Op op, std::size_t m) const {
        KernelConfig config;
        config.vlc = vlc;
        config.nt = nt != 0 ? nt : (op == Op::sddmm ? select_nt(m) : 1);
        config.workers = workers;
        config.prefetch = prefetch;
        validate_config(config);
        return config;
    }
};

void add_case_options(CLI::App& cmd, CaseArgs& args) {
    cmd.add_option("--m", args.m_text, "Rows of the sparse matrix (accepts 1k = 1024)")
        ->capture_default_str();
    cmd.add_option("--k", args.k_text, "Columns of the sparse matrix (accepts 1k = 1024)")
        ->capture_default_str();
    cmd.add_option("--n", args.n_text, "Dense column count (32 and 128 take the vector path)")
        ->capture_default_str();
    cmd.add_option("--sparsity", args.sparsity, "Fraction of zeros, in [0, 1)")
        ->capture_default_str();
    args.seed_opt =
        cmd.add_option("--seed", args.seed, "RNG seed (default derived from case parameters)");
}

void add_config_options(CLI::App& cmd, ConfigArgs& args) {
    cmd.add_option("--vlc", args.vlc, "Chunk length in nonzeros: 8, 16, 32 or 64")
        ->capture_default_str();
    cmd.add_option("--nt", args.nt,
                   "Threads per row for SDDMM: 1, 2, 4, 8 or 16 (default: occupancy-based)");
    cmd.add_option("--workers", args.workers,
                   "Concurrent workers (default: SPARSEMM_WORKERS or all cores)");
    cmd.add_flag("--prefetch", args.prefetch, "Enable software prefetch hints");
}

std::vector<Op> parse_ops_list(const std::string& text) {
    std::vector<Op> ops;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto op = parse_op(item);
        if (!op) throw CLI::ValidationError("unknown operation: " + item);
        ops.push_back(*op);
    }
    if (ops.empty()) throw CLI::ValidationError("--ops must name at least one operation");
    return ops;
}

// Random-valued copy of a mask for SPMM-style checks.
CsrMatrix with_random_values(CsrMatrix a, std::uint64_t seed) {
    if (a.nnz() > 0) {
        a.values = gen_dense(1, a.nnz(), seed).data;
    }
    return a;
}

int cmd_generate(const CaseArgs& case_args, const std::string& out_dir) {
    const BenchmarkCase bc = case_args.to_case();
    const std::filesystem::path dir = out_dir;
    std::filesystem::create_directories(dir);

    const CsrMatrix pattern = gen_pattern(bc.m, bc.k, bc.sparsity, bc.seed);
    const DenseMatrix b = gen_dense(bc.k, bc.n, bc.seed + 1);
    const DenseMatrix c = gen_dense(bc.m, bc.n, bc.seed + 2);
    const DenseMatrix d = gen_dense(bc.k, bc.n, bc.seed + 3);

    const auto mtx = dir / "pattern.mtx";
    const auto bin = dir / "pattern.bin";
    write_matrix_market(pattern, mtx);
    write_csr_binary(pattern, bin);
    write_dense_binary(b, dir / "b.bin");
    write_dense_binary(c, dir / "c.bin");
    write_dense_binary(d, dir / "d.bin");

    std::cout << "nnz " << pattern.nnz() << "\n";
    for (const char* name : {"pattern.mtx", "pattern.bin", "b.bin", "c.bin", "d.bin"}) {
        std::cout << (dir / name).string() << "\n";
    }
    return kExitOk;
}

void print_report_row(const std::string& label, const ComparisonReport& r) {
    std::cout << label << (r.pass ? "  pass" : "  FAIL") << "  max_abs=" << r.max_abs_err
              << "  max_rel=" << r.max_rel_err << "  worst_index=" << r.worst_index << "\n";
}

int cmd_verify(const CaseArgs& case_args, const ConfigArgs& config_args,
               const std::string& op_filter, const std::string& check_values_path) {
    const BenchmarkCase bc = case_args.to_case();
    const CsrMatrix pattern = gen_pattern(bc.m, bc.k, bc.sparsity, bc.seed);
    const DenseMatrix b = gen_dense(bc.k, bc.n, bc.seed + 1);
    const DenseMatrix c = gen_dense(bc.m, bc.n, bc.seed + 2);
    const DenseMatrix d = gen_dense(bc.k, bc.n, bc.seed + 3);

    if (!check_values_path.empty()) {
        const CsrMatrix claimed = read_csr_binary(check_values_path);
        const DenseMatrix cc = gen_dense(claimed.rows, bc.n, bc.seed + 2);
        const DenseMatrix bb = gen_dense(claimed.cols, bc.n, bc.seed + 1);
        const auto expected = dense_sddmm_oracle(cc, bb, claimed);
        const auto report = compare(claimed.values, expected);
        print_report_row("sddmm values file vs oracle", report);
        return report.pass ? kExitOk : kExitFailure;
    }

    bool all_pass = true;
    const auto check = [&](Op op, bool enabled) {
        if (!enabled) return;
        const KernelConfig config = config_args.to_config(op, bc.m);
        if (op == Op::sddmm) {
            const auto expected = dense_sddmm_oracle(c, b, pattern);
            const auto ref = sddmm_reference(pattern, c, b, config);
            const auto vec = sddmm(pattern, c, b, config);
            const auto r1 = compare(ref, expected);
            const auto r2 = compare(vec, expected);
            print_report_row("sddmm   reference  vs oracle", r1);
            print_report_row("sddmm   vectorized vs oracle", r2);
            all_pass = all_pass && r1.pass && r2.pass;
        } else if (op == Op::spmm) {
            const CsrMatrix a = with_random_values(pattern, bc.seed + 4);
            const auto expected = dense_spmm_oracle(csr_to_dense(a), b);
            const auto r1 = compare(spmm_reference(a, b, config), expected);
            const auto r2 = compare(spmm(a, b, config), expected);
            print_report_row("spmm    reference  vs oracle", r1);
            print_report_row("spmm    vectorized vs oracle", r2);
            all_pass = all_pass && r1.pass && r2.pass;
        } else {
            KernelConfig fused = config;
            fused.nt = 1;
            const auto expected = fused_oracle(c, b, d, pattern);
            const auto r1 = compare(fusedmm_reference(pattern, c, b, d, fused), expected);
            const auto r2 = compare(fusedmm(pattern, c, b, d, fused), expected);
            print_report_row("fusedmm reference  vs oracle", r1);
            print_report_row("fusedmm vectorized vs oracle", r2);
            all_pass = all_pass && r1.pass && r2.pass;
        }
    };

    check(Op::sddmm, op_filter.empty() || op_filter == "sddmm");
    check(Op::spmm, op_filter.empty() || op_filter == "spmm");
    check(Op::fusedmm, op_filter.empty() || op_filter == "fusedmm");
    return all_pass ? kExitOk : kExitFailure;
}

void emit_results(const std::vector<BenchResult>& results, const std::string& out_path,
                  const std::string& format, bool with_status) {
    const auto write = [&](std::ostream& os) {
        format == "json" ? report_json(results, os, with_status)
                         : report_csv(results, os, with_status);
    };
    if (out_path.empty()) {
        write(std::cout);
    } else {
        std::ofstream os(out_path);
        if (!os) throw IoError("cannot open for writing: " + out_path);
        write(os);
    }
}

int cmd_bench(const CaseArgs& case_args, const ConfigArgs& config_args,
              const std::string& op_text, const std::string& impl_text,
              std::size_t iterations, const std::string& out_path,
              const std::string& format) {
    const BenchmarkCase bc = case_args.to_case();
    const auto op = parse_op(op_text);
    if (!op) throw CLI::ValidationError("unknown operation: " + op_text);
    const auto impl = parse_impl(impl_text);
    if (!impl) throw CLI::ValidationError("unknown implementation: " + impl_text);
    const KernelConfig config = config_args.to_config(*op, bc.m);

    const BenchResult result = time_kernel(*op, *impl, bc, config, iterations);
    emit_results({result}, out_path, format, false);
    return kExitOk;
}

int cmd_grid(const std::string& ops_text, const std::string& impl_text,
             std::size_t scale_div, std::size_t iterations, const ConfigArgs& config_args,
             const std::string& out_path, const std::string& format) {
    const std::vector<Op> ops = parse_ops_list(ops_text);
    const auto impl = parse_impl(impl_text);
    if (!impl) throw CLI::ValidationError("unknown implementation: " + impl_text);
    const auto grid = scaled_grid(scale_div);

    const ConfigPolicy policy = [&config_args](const BenchmarkCase& bc, Op op) {
        return config_args.to_config(op, bc.m);
    };
    const auto results = run_grid(grid, ops, *impl, iterations, policy, &std::cerr);
    emit_results(results, out_path, format, true);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Sparse SDDMM/SPMM/FusedMM kernels over CSR: generation, verification "
                 "and benchmarking"};
    app.require_subcommand(1);

    CaseArgs gen_args;
    CaseArgs verify_args;
    verify_args.m_text = "256";
    verify_args.k_text = "256";
    CaseArgs bench_args;
    ConfigArgs config_args;
    std::string out_path;
    std::string format = "csv";
    std::string op_text = "spmm";
    std::string ops_text = "sddmm,spmm,fusedmm";
    std::string impl_text = "vectorized";
    std::string op_filter;
    std::string check_values_path;
    std::string out_dir = ".";
    std::size_t iterations = 20;
    std::size_t scale_div = 1;

    CLI::App* generate = app.add_subcommand(
        "generate", "Write a case's sparsity pattern and dense operands to files");
    add_case_options(*generate, gen_args);
    generate->add_option("--out", out_dir, "Output directory")->capture_default_str();

    CLI::App* verify = app.add_subcommand(
        "verify", "Check reference and vectorized kernels against the dense oracles");
    add_case_options(*verify, verify_args);
    add_config_options(*verify, config_args);
    verify->add_option("--op", op_filter, "Restrict to one of sddmm, spmm, fusedmm");
    verify->add_option("--check-values", check_values_path,
                       "Binary CSR file whose values are checked against the SDDMM oracle");

    CLI::App* bench = app.add_subcommand("bench", "Time one kernel on one case");
    add_case_options(*bench, bench_args);
    add_config_options(*bench, config_args);
    bench->add_option("--op", op_text, "One of sddmm, spmm, fusedmm")->capture_default_str();
    bench->add_option("--impl", impl_text, "reference or vectorized")->capture_default_str();
    bench->add_option("--iters", iterations, "Timed iterations (min is reported)")
        ->capture_default_str();
    bench->add_option("--out", out_path, "Output file (default: stdout)");
    bench->add_option("--format", format, "csv or json")->capture_default_str();

    CLI::App* grid = app.add_subcommand(
        "grid", "Run the 72-case benchmark grid and write a report");
    grid->add_option("--ops", ops_text, "Comma-separated operations")->capture_default_str();
    grid->add_option("--impl", impl_text, "reference or vectorized")->capture_default_str();
    grid->add_option("--scale-div", scale_div,
                     "Divide M and K by this power of two (desk-scale runs)")
        ->capture_default_str();
    grid->add_option("--iters", iterations, "Timed iterations per case")
        ->capture_default_str();
    add_config_options(*grid, config_args);
    grid->add_option("--out", out_path, "Output file (default: stdout)");
    grid->add_option("--format", format, "csv or json")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (generate->parsed()) return cmd_generate(gen_args, out_dir);
        if (verify->parsed())
            return cmd_verify(verify_args, config_args, op_filter, check_values_path);
        if (bench->parsed())
            return cmd_bench(bench_args, config_args, op_text, impl_text, iterations,
                             out_path, format);
        if (grid->parsed())
            return cmd_grid(ops_text, impl_text, scale_div, iterations, config_args,
                            out_path, format);
    } catch (const CLI::ValidationError& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitUsage;
    } catch (const InvalidConfigError& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitUsage;
    } catch (const IoError& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitFailure;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitFailure;
    }
    return kExitUsage;
}
