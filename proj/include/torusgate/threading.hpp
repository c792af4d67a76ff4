#ifndef TORUSGATE_THREADING_HPP
#define TORUSGATE_THREADING_HPP

#include <cstdint>
#include <thread>
#include <vector>

namespace torusgate {

/// Runs fn(index) for index in [0, total) on up to `threads` workers in
/// contiguous chunks. fn must be safe to call concurrently for distinct
/// indices; with threads <= 1 this is a plain loop.
template <typename Fn>
void parallel_for(uint64_t total, uint32_t threads, Fn&& fn) {
    if (threads <= 1 || total <= 1) {
        for (uint64_t i = 0; i < total; ++i) fn(i);
        return;
    }
    const uint32_t workers = static_cast<uint32_t>(std::min<uint64_t>(threads, total));
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (uint32_t w = 0; w < workers; ++w) {
        const uint64_t begin = total * w / workers;
        const uint64_t end = total * (w + 1) / workers;
        pool.emplace_back([begin, end, &fn] {
            for (uint64_t i = begin; i < end; ++i) fn(i);
        });
    }
    for (auto& t : pool) t.join();
}

}  // namespace torusgate

#endif
