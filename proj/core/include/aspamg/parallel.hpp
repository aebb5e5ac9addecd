/// @file parallel.hpp
/// @brief Static-chunk parallel loop over row ranges.
///
/// Kernels built on this write to disjoint output rows and keep every
/// per-row reduction in a fixed order, so results are bit-identical at any
/// thread count.

#ifndef ASPAMG_PARALLEL_HPP
#define ASPAMG_PARALLEL_HPP

#include "aspamg/types.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>
#include <vector>

namespace aspamg {

namespace detail {
inline std::atomic<int>& thread_count() {
    static std::atomic<int> count{1};
    return count;
}
} // namespace detail

/// Global worker count used by row-parallel kernels. Default 1.
inline void set_num_threads(int n) { detail::thread_count().store(n < 1 ? 1 : n); }
inline int num_threads() { return detail::thread_count().load(); }

/// Runs fn(begin, end) over a static contiguous partition of [0, n).
/// The first exception raised by a worker is rethrown on the caller.
template <typename Fn>
void parallel_for(index_t n, Fn&& fn) {
    const int nt = num_threads();
    if (nt <= 1 || n < 2 * nt) {
        fn(index_t{0}, n);
        return;
    }
    std::vector<std::thread> workers;
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(nt));
    workers.reserve(static_cast<std::size_t>(nt));
    const index_t chunk = (n + nt - 1) / nt;
    for (int t = 0; t < nt; ++t) {
        const index_t lo = t * chunk;
        const index_t hi = std::min(n, lo + chunk);
        if (lo >= hi) break;
        workers.emplace_back([&fn, &errors, t, lo, hi] {
            try {
                fn(lo, hi);
            } catch (...) {
                errors[static_cast<std::size_t>(t)] = std::current_exception();
            }
        });
    }
    for (auto& w : workers) w.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

} // namespace aspamg

#endif // ASPAMG_PARALLEL_HPP
