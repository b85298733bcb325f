#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace eos {

/* Number of workers to use when the caller passes 0. */
inline unsigned default_workers()
{
    unsigned w = std::thread::hardware_concurrency();
    return w ? w : 1;
}

/* Splits [lo, hi] into `workers` contiguous shards and runs fn(shard_lo,
 * shard_hi, out) for each, then returns the per-shard results in shard
 * order. The split depends only on (lo, hi, workers), and callers merge
 * with associative operations, so results do not depend on scheduling. */
template <class Result, class Fn>
std::vector<Result> run_sharded(int64_t lo, int64_t hi, unsigned workers, Fn fn)
{
    if (workers == 0) workers = default_workers();
    int64_t span = hi >= lo ? hi - lo + 1 : 0;
    workers = unsigned(std::max<int64_t>(1, std::min<int64_t>(workers, span)));
    std::vector<Result> out(workers);
    std::vector<std::exception_ptr> errs(workers);
    auto shard = [&](unsigned k) {
        int64_t a = lo + span * int64_t(k) / int64_t(workers);
        int64_t b = lo + span * int64_t(k + 1) / int64_t(workers) - 1;
        try {
            fn(a, b, out[k]);
        } catch (...) {
            errs[k] = std::current_exception();
        }
    };
    if (workers == 1) {
        shard(0);
    } else {
        std::vector<std::thread> ts;
        for (unsigned k = 0; k < workers; ++k) ts.emplace_back(shard, k);
        for (auto & t : ts) t.join();
    }
    for (auto & e : errs)
        if (e) std::rethrow_exception(e);
    return out;
}

}  // namespace eos
