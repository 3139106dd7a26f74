#pragma once

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "zerogamma/format.hpp"
#include "zerogamma/series.hpp"

namespace zerogamma {

/// Largest |naive - factorized| a benchmark run may report before it fails.
inline constexpr double kBenchTolerance = 1e-10;

struct BenchReport
{
    std::uint64_t k                  = 0;
    double        t                  = 0.0;
    double        naive_seconds      = 0.0;
    double        factorized_seconds = 0.0;
    double        max_abs_diff       = 0.0;
};

namespace detail {

template <class Fn>
double median_seconds(int runs, Fn&& fn)
{
    std::vector<double> samples;
    samples.reserve(static_cast<std::size_t>(runs));
    for (int i = 0; i < runs; ++i) {
        auto const start = std::chrono::steady_clock::now();
        fn();
        std::chrono::duration<double> const elapsed = std::chrono::steady_clock::now() - start;
        samples.push_back(elapsed.count());
    }
    std::nth_element(samples.begin(), samples.begin() + runs / 2, samples.end());
    return samples[static_cast<std::size_t>(runs / 2)];
}

} // namespace detail

/*!
    Times offdiag_naive against offdiag_factorized at sigma = 1/2.

    Each timed run evaluates both the alternating and the non-alternating sum;
    the reported time is the median over `runs` repetitions and max_abs_diff
    the larger discrepancy of the two flags. A discrepancy above
    kBenchTolerance throws, as does any k above `cap`.
*/
inline std::vector<BenchReport> bench_offdiag(double t, std::span<std::uint64_t const> k_list,
                                              std::uint64_t cap = kDefaultOracleCap, int runs = 3,
                                              ReductionOptions const& options = {})
{
    for (auto const k : k_list) {
        if (k > cap) {
            throw domain_error("bench_offdiag: k = " + std::to_string(k) + " exceeds the oracle cap of " +
                               std::to_string(cap));
        }
    }

    std::vector<BenchReport> reports;
    for (auto const k : k_list) {
        SeriesParams const    params{0.5, t, k};
        std::array<double, 2> naive{};
        std::array<double, 2> factorized{};

        BenchReport report{.k = k, .t = t};
        report.naive_seconds = detail::median_seconds(runs, [&] {
            naive = {offdiag_naive(params, true, cap), offdiag_naive(params, false, cap)};
        });
        report.factorized_seconds = detail::median_seconds(runs, [&] {
            factorized = {offdiag_factorized(params, true, options), offdiag_factorized(params, false, options)};
        });
        report.max_abs_diff =
            std::max(std::abs(naive[0] - factorized[0]), std::abs(naive[1] - factorized[1]));
        if (!(report.max_abs_diff <= kBenchTolerance)) {
            throw std::runtime_error("bench_offdiag: naive and factorized sums disagree by " +
                                     format_number(report.max_abs_diff) + " at k = " + std::to_string(k));
        }
        reports.push_back(report);
    }
    return reports;
}

inline CsvTable bench_table(std::span<BenchReport const> reports)
{
    CsvTable table{{"k", "t", "naive_seconds", "factorized_seconds", "max_abs_diff"}, {}};
    for (auto const& r : reports) {
        table.rows.push_back({r.k, r.t, r.naive_seconds, r.factorized_seconds, r.max_abs_diff});
    }
    return table;
}

} // namespace zerogamma
