#pragma once

#include <cstdint>
#include <thread>
#include <vector>

namespace apcqc {

// Worker count: APCQC_THREADS if set (clamped to >= 1), otherwise the
// machine's hardware concurrency.
int default_thread_count();

// Splits [0, total) into at most `threads` contiguous chunks and runs
// fn(worker_slot, begin, end) on each, worker 0 on the calling thread.
// Callers reduce per-slot results in slot order afterwards, so outcomes do
// not depend on the worker count.
template <typename Fn>
void run_chunked(std::uint64_t total, int threads, Fn&& fn) {
    if (total == 0) return;
    std::uint64_t workers = static_cast<std::uint64_t>(threads < 1 ? 1 : threads);
    if (workers > total) workers = total;
    if (workers == 1) {
        fn(0, std::uint64_t{0}, total);
        return;
    }
    std::uint64_t chunk = (total + workers - 1) / workers;
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers - 1));
    for (std::uint64_t s = 1; s < workers; ++s) {
        std::uint64_t begin = s * chunk;
        std::uint64_t end = begin + chunk < total ? begin + chunk : total;
        if (begin >= end) break;
        pool.emplace_back([&fn, s, begin, end] { fn(static_cast<int>(s), begin, end); });
    }
    fn(0, std::uint64_t{0}, chunk < total ? chunk : total);
    for (auto& t : pool) t.join();
}

}  // namespace apcqc
