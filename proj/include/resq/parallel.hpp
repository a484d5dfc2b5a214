#ifndef RESQ_PARALLEL_HPP
#define RESQ_PARALLEL_HPP

#include <cstddef>
#include <thread>
#include <vector>

namespace resq {

// Splits [0, total) into one contiguous slice per worker and returns the
// per-slice results in slice order, so the combined result never depends on
// the worker count. fn must be pure: fn(begin, end) -> T.
template <typename T, typename Fn>
std::vector<T> run_sliced(std::size_t total, unsigned jobs, Fn&& fn)
{
    if (jobs < 1) {
        jobs = 1;
    }
    const std::size_t slices = std::min<std::size_t>(jobs, total == 0 ? 1 : total);
    std::vector<T> results(slices);
    std::vector<std::thread> threads;
    threads.reserve(slices);
    for (std::size_t s = 0; s < slices; ++s) {
        const std::size_t begin = total * s / slices;
        const std::size_t end = total * (s + 1) / slices;
        threads.emplace_back([&results, s, begin, end, &fn] {
            results[s] = fn(begin, end);
        });
    }
    for (auto& t : threads) {
        t.join();
    }
    return results;
}

template <typename Fn>
unsigned long long count_sliced(std::size_t total, unsigned jobs, Fn&& fn)
{
    auto partials = run_sliced<unsigned long long>(total, jobs, fn);
    unsigned long long sum = 0;
    for (unsigned long long p : partials) {
        sum += p;
    }
    return sum;
}

} // namespace resq

#endif
