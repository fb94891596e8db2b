#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace subshift {

// Worker count: SUBSHIFT_LAB_THREADS if set and positive, else hardware concurrency.
unsigned thread_count();

// Splits [0, n) into contiguous chunks and runs fn(chunk_index, begin, end) on each.
// Chunk boundaries depend only on n and min_chunk, never on the thread count, so results
// merged by chunk index are identical for any parallelism.
template <class Fn>
std::size_t parallel_chunks(std::size_t n, std::size_t min_chunk, Fn&& fn) {
    const std::size_t chunk = std::max<std::size_t>(min_chunk, 1);
    const std::size_t chunks = n == 0 ? 0 : (n + chunk - 1) / chunk;
    const unsigned workers = std::min<std::size_t>(thread_count(), std::max<std::size_t>(chunks, 1));
    auto run = [&](unsigned w) {
        for (std::size_t c = w; c < chunks; c += workers) fn(c, c * chunk, std::min(n, (c + 1) * chunk));
    };
    if (workers <= 1) {
        run(0);
        return chunks;
    }
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
    for (auto& t : pool) t.join();
    return chunks;
}

}  // namespace subshift
