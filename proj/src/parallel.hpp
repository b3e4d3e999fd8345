#pragma once

// Internal: deterministic work splitting over integer index ranges.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <functional>
#include <optional>
#include <thread>
#include <vector>

namespace asym::detail {

inline int resolveWorkers(int requested)
{
    if (requested > 0)
        return requested;
    return std::max(1u, std::thread::hardware_concurrency());
}

/// Smallest i in [begin, end) with pred(i), scanning blocks in parallel.
/// Workers abandon blocks beyond the best hit so far, so the answer does not
/// depend on the worker count.
inline std::optional<std::uint64_t> firstMatch(std::uint64_t begin, std::uint64_t end, int workers,
                                               const std::function<bool(std::uint64_t)>& pred)
{
    constexpr std::uint64_t kBlock = 256;
    std::atomic<std::uint64_t> best{end};
    std::atomic<std::uint64_t> next{begin};
    auto work = [&] {
        for (;;) {
            const auto lo = next.fetch_add(kBlock);
            if (lo >= end || lo >= best.load())
                return;
            const auto hi = std::min(end, lo + kBlock);
            for (auto i = lo; i < hi && i < best.load(); ++i) {
                if (pred(i)) {
                    auto cur = best.load();
                    while (i < cur && !best.compare_exchange_weak(cur, i)) {
                    }
                    break;
                }
            }
        }
    };
    const int n = resolveWorkers(workers);
    if (n == 1 || end - begin <= kBlock) {
        work();
    } else {
        std::vector<std::jthread> pool;
        for (int w = 0; w < n; ++w)
            pool.emplace_back(work);
    }
    if (best.load() == end)
        return std::nullopt;
    return best.load();
}

/// Calls fn(lo, hi, worker) on contiguous slices of [begin, end).
inline void forEachSlice(std::uint64_t begin, std::uint64_t end, int workers,
                         const std::function<void(std::uint64_t, std::uint64_t, int)>& fn)
{
    const auto n = static_cast<std::uint64_t>(resolveWorkers(workers));
    const auto total = end - begin;
    if (n == 1 || total < 2 * n) {
        fn(begin, end, 0);
        return;
    }
    std::vector<std::jthread> pool;
    for (std::uint64_t w = 0; w < n; ++w) {
        const auto lo = begin + total * w / n;
        const auto hi = begin + total * (w + 1) / n;
        pool.emplace_back(fn, lo, hi, static_cast<int>(w));
    }
}

} // namespace asym::detail
