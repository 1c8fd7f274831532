#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "sparsemm/kernels.hpp"
#include "sparsemm/workload.hpp"

namespace sparsemm {

enum class Op { sddmm, spmm, fusedmm };
enum class Impl { reference, vectorized };

std::string to_string(Op op);
std::string to_string(Impl impl);
std::optional<Op> parse_op(const std::string& s);
std::optional<Impl> parse_impl(const std::string& s);

struct BenchResult {
    BenchmarkCase bench_case;
    Op op = Op::sddmm;
    Impl impl = Impl::vectorized;
    KernelConfig config;
    std::size_t nnz = 0;
    std::size_t iterations = 0;
    double min_time = 0.0;             // seconds, min over iterations
    std::vector<double> all_times;     // seconds per iteration
    std::uint64_t flops = 0;
    double gflops_per_s = 0.0;
    double ai_worst = 0.0;
    double ai_best = 0.0;
    std::string status = "ok";         // "ok" or the failure message
};

/// 2 flops per multiply-add per (nonzero, lane); fusedmm does both passes.
std::uint64_t flops_of(Op op, std::size_t nnz, std::size_t n);

/// Worst case: every B row re-read per nonzero plus index and value
/// traffic. Best case: every operand array touched once. SDDMM flop count.
std::pair<double, double> arithmetic_intensity_bounds(std::size_t m, std::size_t k,
                                                      std::size_t n, std::size_t nnz);

/// Generates inputs from the case (untimed), runs one untimed warm-up,
/// then times `iterations` runs with a monotonic clock.
BenchResult time_kernel(Op op, Impl impl, const BenchmarkCase& bench_case,
                        const KernelConfig& config, std::size_t iterations = 20);

using ConfigPolicy = std::function<KernelConfig(const BenchmarkCase&, Op)>;

/// vlc=32; nt=select_nt(M) for SDDMM, 1 otherwise; workers auto.
KernelConfig default_config_policy(const BenchmarkCase& bench_case, Op op);

/// One result per (case, op), in grid order. Per-case failures are recorded
/// in the result's status field; the grid keeps going.
std::vector<BenchResult> run_grid(const std::vector<BenchmarkCase>& grid,
                                  const std::vector<Op>& ops, Impl impl,
                                  std::size_t iterations = 20,
                                  const ConfigPolicy& policy = default_config_policy,
                                  std::ostream* progress = nullptr);

void report_csv(const std::vector<BenchResult>& results, std::ostream& os,
                bool with_status = false);
void report_csv(const std::vector<BenchResult>& results, const std::filesystem::path& path,
                bool with_status = false);
void report_json(const std::vector<BenchResult>& results, std::ostream& os,
                 bool with_status = false);

}  // namespace sparsemm
