#pragma once

#include <thread>
#include <vector>

#include "pythia/checked.hpp"

namespace pythia {

// Splits [lo, hi) into `jobs` contiguous chunks, runs fn(chunk_lo, chunk_hi)
// on each (worker threads for jobs > 1), and returns the partial results in
// chunk order. Callers merge deterministically, so a partitioned run must
// reproduce the sequential result exactly.
template <class R, class Fn>
std::vector<R> run_partitioned(u64 lo, u64 hi, unsigned jobs, Fn fn) {
    if (jobs == 0) jobs = 1;
    const u64 span = hi > lo ? hi - lo : 0;
    if (jobs == 1 || span <= 1) {
        std::vector<R> out;
        out.push_back(fn(lo, hi));
        return out;
    }
    if (jobs > span) jobs = static_cast<unsigned>(span);
    std::vector<R> partials(jobs);
    std::vector<std::thread> workers;
    workers.reserve(jobs);
    const u64 chunk = span / jobs;
    const u64 rem = span % jobs;
    u64 start = lo;
    for (unsigned i = 0; i < jobs; ++i) {
        const u64 len = chunk + (i < rem ? 1 : 0);
        const u64 end = start + len;
        workers.emplace_back([&partials, i, start, end, &fn] {
            partials[i] = fn(start, end);
        });
        start = end;
    }
    for (auto& w : workers) w.join();
    return partials;
}

}  // namespace pythia
