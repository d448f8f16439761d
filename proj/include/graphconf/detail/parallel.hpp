#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace graphconf::detail {

// Splits [0, count) into `chunks` contiguous ranges and calls fn(begin, end, chunk)
// for each, on at most `threads` worker threads. Chunk k always covers the same
// range regardless of the thread count, so callers can merge results by chunk
// index and get schedule-independent output.
template <typename Fn>
void for_each_chunk(std::size_t count, std::size_t chunks, unsigned threads, Fn&& fn) {
    chunks = std::max<std::size_t>(1, std::min(chunks, count));
    auto range = [&](std::size_t k) {
        return std::pair{count * k / chunks, count * (k + 1) / chunks};
    };
    if (threads <= 1 || chunks == 1) {
        for (std::size_t k = 0; k < chunks; ++k) {
            auto [b, e] = range(k);
            fn(b, e, k);
        }
        return;
    }
    const std::size_t workers = std::min<std::size_t>(threads, chunks);
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            try {
                for (std::size_t k = w; k < chunks; k += workers) {
                    auto [b, e] = range(k);
                    fn(b, e, k);
                }
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

} // namespace graphconf::detail
