#pragma once

#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace rankdens {

/// Chunk count used by every parallel sweep. It is fixed so that the split,
/// and therefore any order-sensitive reduction, never depends on the thread count.
inline constexpr unsigned kChunks = 64;

struct Range {
    std::uint64_t begin = 0;
    std::uint64_t end = 0;
};

/// Split [0, total) into `chunks` contiguous ranges of near-equal size.
std::vector<Range> split_range(std::uint64_t total, unsigned chunks = kChunks);

/// Run fn(range) for every chunk on up to `jobs` threads. Results come back
/// in chunk order. The first exception thrown by a worker is rethrown.
template <class R, class Fn>
std::vector<R> run_chunks(std::uint64_t total, unsigned jobs, Fn fn, unsigned chunks = kChunks) {
    auto ranges = split_range(total, chunks);
    std::vector<R> out(ranges.size());
    if (jobs <= 1 || ranges.size() <= 1) {
        for (std::size_t i = 0; i < ranges.size(); ++i) out[i] = fn(ranges[i]);
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr err;
    std::mutex err_mu;
    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= ranges.size()) return;
            try {
                out[i] = fn(ranges[i]);
            } catch (...) {
                std::lock_guard<std::mutex> lk(err_mu);
                if (!err) err = std::current_exception();
            }
        }
    };
    unsigned n = jobs < ranges.size() ? jobs : static_cast<unsigned>(ranges.size());
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    if (err) std::rethrow_exception(err);
    return out;
}

} // namespace rankdens
