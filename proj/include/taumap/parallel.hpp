#pragma once

#include <atomic>
#include <exception>
#include <thread>
#include <vector>

namespace taumap {

inline int default_jobs() {
    unsigned hc = std::thread::hardware_concurrency();
    return hc ? static_cast<int>(hc) : 1;
}

// Runs worker(i) for i in [0, tasks) on up to `jobs` threads and returns the
// results indexed by task, so any reduction over them is schedule-independent.
// If workers throw, the exception from the lowest-numbered failing task is
// rethrown after all threads have joined.
template <class T, class Worker>
std::vector<T> parallel_map(long tasks, int jobs, Worker worker) {
    std::vector<T> results(tasks);
    if (jobs <= 1 || tasks <= 1) {
        for (long i = 0; i < tasks; ++i) results[i] = worker(i);
        return results;
    }
    std::vector<std::exception_ptr> errors(tasks);
    std::atomic<long> next{0};
    auto run = [&] {
        for (;;) {
            long i = next.fetch_add(1);
            if (i >= tasks) return;
            try {
                results[i] = worker(i);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    int nthreads = static_cast<int>(std::min<long>(jobs, tasks));
    pool.reserve(nthreads);
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(run);
    for (auto& th : pool) th.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return results;
}

}  // namespace taumap
