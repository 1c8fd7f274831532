#pragma once

#include <cstddef>
#include <thread>
#include <vector>

namespace sparsemm::detail {

// Static contiguous block partition of [0, n_tasks) over the workers.
// fn(begin, end) runs once per non-empty block; block boundaries depend
// only on (n_tasks, workers), never on scheduling.
template <class Fn>
void parallel_for(std::size_t n_tasks, std::size_t workers, const Fn& fn) {
    if (n_tasks == 0) return;
    if (workers <= 1 || n_tasks == 1) {
        fn(std::size_t{0}, n_tasks);
        return;
    }
    const std::size_t w = std::min(workers, n_tasks);
    const std::size_t chunk = (n_tasks + w - 1) / w;
    std::vector<std::thread> pool;
    pool.reserve(w - 1);
    for (std::size_t t = 1; t < w; ++t) {
        const std::size_t begin = t * chunk;
        const std::size_t end = std::min(begin + chunk, n_tasks);
        if (begin >= end) break;
        pool.emplace_back([&fn, begin, end] { fn(begin, end); });
    }
    fn(std::size_t{0}, std::min(chunk, n_tasks));
    for (auto& th : pool) th.join();
}

}  // namespace sparsemm::detail
