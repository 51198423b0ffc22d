#pragma once

#include <atomic>
#include <functional>
#include <thread>
#include <vector>

namespace twf {

// Parallel map over an index range; results land in caller-owned slots, so
// ordering is deterministic regardless of the thread count.  Work items must
// be independent (per-representation computations are).
inline void parallel_for(int count, int threads, const std::function<void(int)>& fn) {
    if (threads <= 1 || count <= 1) {
        for (int i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    int workers = std::min(threads, count);
    pool.reserve(std::size_t(workers));
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
        });
    for (auto& t : pool) t.join();
}

}  // namespace twf
