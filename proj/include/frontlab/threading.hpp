#pragma once

#include <cstddef>
#include <thread>
#include <vector>

namespace frontlab {

/// Runs fn(begin, end) over [0, n) split into contiguous chunks. Chunks are
/// independent lines of a grid, so results are bitwise identical for any
/// thread count.
template <class Fn>
void parallel_for(std::size_t n, int threads, Fn&& fn) {
    if (threads <= 1 || n < 2 * static_cast<std::size_t>(threads)) {
        fn(static_cast<std::size_t>(0), n);
        return;
    }
    const auto nt = static_cast<std::size_t>(threads);
    std::vector<std::thread> pool;
    pool.reserve(nt);
    const std::size_t chunk = (n + nt - 1) / nt;
    for (std::size_t t = 0; t < nt; ++t) {
        const std::size_t b = t * chunk;
        const std::size_t e = std::min(n, b + chunk);
        if (b >= e) break;
        pool.emplace_back([&fn, b, e] { fn(b, e); });
    }
    for (auto& th : pool) th.join();
}

}  // namespace frontlab
