#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace ksl {

/// Runs body(worker, begin, end) over contiguous chunks of [0, n) on up to
/// `jobs` threads. Chunk boundaries depend only on (n, jobs); callers that
/// need scheduling-independent results must reduce per-chunk outputs in
/// worker order.
template <class Body>
void parallel_chunks(std::size_t n, unsigned jobs, Body&& body) {
    jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(n, 1))));
    if (jobs == 1) {
        body(0u, std::size_t{0}, n);
        return;
    }
    std::vector<std::thread> threads;
    std::vector<std::exception_ptr> errors(jobs);
    const std::size_t chunk = (n + jobs - 1) / jobs;
    for (unsigned w = 0; w < jobs; ++w) {
        const std::size_t begin = std::min(n, w * chunk), end = std::min(n, begin + chunk);
        threads.emplace_back([&, w, begin, end] {
            try {
                body(w, begin, end);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : threads) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

}  // namespace ksl
