#pragma once

#include <future>
#include <thread>
#include <vector>

namespace seedcast {

// Applies fn to 0..n-1 across hardware threads; results land in input order
// regardless of scheduling.
template <class Fn>
auto parallel_map(size_t n, Fn fn) {
    using R = decltype(fn(size_t{0}));
    std::vector<R> results(n);
    unsigned workers = std::max(1u, std::thread::hardware_concurrency());
    if (workers == 1 || n <= 1) {
        for (size_t i = 0; i < n; ++i) results[i] = fn(i);
        return results;
    }
    std::vector<std::future<void>> futures;
    size_t chunk = (n + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
        size_t lo = static_cast<size_t>(w) * chunk;
        size_t hi = std::min(n, lo + chunk);
        if (lo >= hi) break;
        futures.push_back(std::async(std::launch::async, [lo, hi, &results, &fn] {
            for (size_t i = lo; i < hi; ++i) results[i] = fn(i);
        }));
    }
    for (auto& f : futures) f.get();
    return results;
}

}  // namespace seedcast
