#pragma once

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <span>
#include <thread>
#include <type_traits>
#include <vector>

#include "zerogamma/errors.hpp"

#ifdef __FAST_MATH__
#error "fast math enabled; this would negate the compensation"
#endif

namespace zerogamma {

/*!
    Kahan-Babuska (Neumaier) running sum.

    The compensation term holds the low-order bits lost by each addition. Unlike
    plain Kahan it also recovers them when the incoming term is larger in
    magnitude than the running total, so [1, 1e-16, -1] sums to 1e-16.
*/
struct SumAccumulator
{
    double running      = 0.0;
    double compensation = 0.0;

    constexpr void add(double term) noexcept
    {
        double const next = running + term;
        if (std::abs(running) >= std::abs(term)) {
            compensation += (running - next) + term;
        } else {
            compensation += (term - next) + running;
        }
        running = next;
    }

    constexpr SumAccumulator& operator+=(double term) noexcept
    {
        add(term);
        return *this;
    }

    /// Folds another partial sum in, keeping its compensation separate.
    constexpr void merge(SumAccumulator const& other) noexcept
    {
        add(other.running);
        add(other.compensation);
    }

    [[nodiscard]] constexpr double value() const noexcept { return running + compensation; }
};

/// Compensated total of `terms` in the given order.
inline double compensated_sum(std::span<double const> terms)
{
    SumAccumulator acc;
    for (double const term : terms) {
        if (!std::isfinite(term)) {
            throw domain_error("compensated_sum: non-finite term");
        }
        acc.add(term);
    }
    return acc.value();
}

/// Chunking and worker count for the deterministic reductions below.
/// `workers` only affects speed; the result depends on `chunk` alone.
struct ReductionOptions
{
    std::size_t chunk   = 4096;
    unsigned    workers = 1;
};

namespace detail {

template <class Fn>
void run_chunks(std::size_t chunk_count, unsigned workers, Fn&& work)
{
    auto const thread_count =
        static_cast<std::size_t>(std::clamp<std::size_t>(workers, 1, std::max<std::size_t>(chunk_count, 1)));
    if (thread_count <= 1) {
        for (std::size_t c = 0; c < chunk_count; ++c) {
            work(c);
        }
        return;
    }

    std::atomic<std::size_t> next{0};
    auto loop = [&] {
        for (std::size_t c = next.fetch_add(1); c < chunk_count; c = next.fetch_add(1)) {
            work(c);
        }
    };
    std::vector<std::jthread> pool;
    pool.reserve(thread_count - 1);
    for (std::size_t i = 1; i < thread_count; ++i) {
        pool.emplace_back(loop);
    }
    loop();
}

} // namespace detail

/*!
    Sums N parallel series over n = 1..k at once.

    `generator(n)` returns a std::array<double, N> holding the n-th term of each
    series. The index range is cut into fixed chunks of `options.chunk`
    consecutive indices; each chunk is summed with compensation, and chunk
    totals are merged in ascending chunk order on the calling thread. Which
    worker ran which chunk never enters the result, so the output is
    bit-identical for any worker count.
*/
template <std::size_t N, class Generator>
std::array<double, N> chunked_parallel_reduce(Generator&& generator, std::uint64_t k,
                                              ReductionOptions const& options = {})
{
    static_assert(std::is_invocable_r_v<std::array<double, N>, Generator&, std::uint64_t>,
                  "generator must map an index to std::array<double, N>");
    if (options.chunk == 0) {
        throw domain_error("chunked_parallel_reduce: chunk must be at least 1");
    }

    std::array<double, N> out{};
    if (k == 0) {
        return out;
    }

    std::uint64_t const chunk       = options.chunk;
    std::size_t const   chunk_count = static_cast<std::size_t>((k + chunk - 1) / chunk);
    std::vector<std::array<SumAccumulator, N>> partial(chunk_count);

    detail::run_chunks(chunk_count, options.workers, [&](std::size_t c) {
        std::uint64_t const first = static_cast<std::uint64_t>(c) * chunk + 1;
        std::uint64_t const last  = std::min<std::uint64_t>(first + chunk - 1, k);
        std::array<SumAccumulator, N> acc{};
        for (std::uint64_t n = first; n <= last; ++n) {
            auto const terms = generator(n);
            for (std::size_t i = 0; i < N; ++i) {
                acc[i].add(terms[i]);
            }
        }
        partial[c] = acc;
    });

    std::array<SumAccumulator, N> total{};
    for (auto const& chunk_sums : partial) {
        for (std::size_t i = 0; i < N; ++i) {
            total[i].merge(chunk_sums[i]);
        }
    }
    for (std::size_t i = 0; i < N; ++i) {
        out[i] = total[i].value();
    }
    return out;
}

/// Scalar form of chunked_parallel_reduce: sums generator(n) for n = 1..k.
template <class Generator>
double chunked_parallel_sum(Generator&& generator, std::uint64_t k, std::size_t chunk = 4096, unsigned workers = 1)
{
    auto wrapped = [&](std::uint64_t n) { return std::array<double, 1>{static_cast<double>(generator(n))}; };
    return chunked_parallel_reduce<1>(wrapped, k, ReductionOptions{chunk, workers})[0];
}

} // namespace zerogamma
