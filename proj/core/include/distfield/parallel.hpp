#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace distfield {

// Runs fn(begin, end) over a partition of [0, n). Each index range is owned by
// exactly one worker; the call returns after all workers join, so successive
// calls act as barriers between phases.
template <typename Fn>
void parallel_for(std::size_t n, unsigned threads, Fn&& fn) {
    if (n == 0) return;
    const std::size_t workers = std::min<std::size_t>(threads == 0 ? 1 : threads, n);
    if (workers <= 1) {
        fn(std::size_t{0}, n);
        return;
    }
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    const std::size_t chunk = (n + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
        const std::size_t begin = w * chunk;
        const std::size_t end = std::min(n, begin + chunk);
        if (begin >= end) break;
        pool.emplace_back([&fn, begin, end] { fn(begin, end); });
    }
}

}  // namespace distfield
