#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <vector>

namespace colqsym {

// Worker count: $COLQSYM_JOBS if set and positive, else the hardware count.
inline unsigned default_jobs()
{
    if (const char* env = std::getenv("COLQSYM_JOBS")) {
        try {
            const int value = std::stoi(env);
            if (value > 0)
                return static_cast<unsigned>(value);
        } catch (const std::exception&) {
        }
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

// Splits [0, count) into contiguous chunks and calls fn(begin, end) on each
// from its own thread. Callers write results into per-index slots, so the
// merged output does not depend on scheduling. The first exception (by
// chunk order) is rethrown after all workers finish.
template <class Fn>
void parallel_for(std::size_t count, unsigned jobs, Fn&& fn)
{
    if (count == 0)
        return;
    const std::size_t workers = std::clamp<std::size_t>(jobs, 1, count);
    if (workers == 1) {
        fn(std::size_t{0}, count);
        return;
    }
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> threads;
    threads.reserve(workers);
    const std::size_t chunk = (count + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
        const std::size_t begin = w * chunk;
        const std::size_t end = std::min(count, begin + chunk);
        if (begin >= end)
            break;
        threads.emplace_back([&, w, begin, end] {
            try {
                fn(begin, end);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : threads)
        t.join();
    for (auto& e : errors)
        if (e)
            std::rethrow_exception(e);
}

} // namespace colqsym
