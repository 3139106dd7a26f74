#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include "zerogamma/errors.hpp"
#include "zerogamma/series.hpp"
#include "zerogamma/summation.hpp"

namespace zerogamma {

/// Distance from a pole of cot or sec below which g refuses to evaluate.
inline constexpr double kSingularityGuard = 1e-8;

/// Squared zero ordinate isolated from the non-alternating gamma formula:
///
///     (k + 1) / (gamma_ref + log k + offdiag(non-alternating, k)) - 1/4
///
/// and returned as f(t)^2. Throws singular_error outside the domain of f.
inline double f_of_t(double t, std::uint64_t k, double gamma_ref = kGammaRef, ReductionOptions const& options = {})
{
    if (!(t > 0.0) || !std::isfinite(t)) {
        throw domain_error("f_of_t: t must be positive and finite");
    }
    detail::require_k(k, 2, "f_of_t");

    double const bracket = gamma_ref + std::log(static_cast<double>(k)) + offdiag_factorized({0.5, t, k}, false, options);
    if (!(bracket > 0.0)) {
        throw singular_error("f_of_t: inverted bracket is not positive at t = " + std::to_string(t));
    }
    double const radicand = static_cast<double>(k + 1) / bracket - 0.25;
    if (!(radicand >= 0.0)) {
        throw singular_error("f_of_t: negative root argument at t = " + std::to_string(t));
    }
    return std::sqrt(radicand);
}

inline double t_squared_extract(double t, std::uint64_t k, double gamma_ref = kGammaRef,
                                ReductionOptions const& options = {})
{
    double const f = f_of_t(t, k, gamma_ref, options);
    return f * f;
}

/*!
    Fixed-point map built from the cosine asymptotic equation:

        g(t) = cot(t log k) * ((1/4 + t^2) / (sqrt(k) cos(t log k)) * sum_{n=1..k} cos(t log n)/sqrt(n) - 1/2)

    Zero ordinates are approximate fixed points for large k. Throws
    singular_error when |sin(t log k)| or |cos(t log k)| is below `guard`.
*/
inline double g_of_t(double t, std::uint64_t k, double guard = kSingularityGuard, ReductionOptions const& options = {})
{
    if (!(t > 0.0) || !std::isfinite(t)) {
        throw domain_error("g_of_t: t must be positive and finite");
    }
    detail::require_k(k, 2, "g_of_t");

    double const phase = t * std::log(static_cast<double>(k));
    double const s     = std::sin(phase);
    double const c     = std::cos(phase);
    if (std::abs(s) < guard || std::abs(c) < guard) {
        throw singular_error("g_of_t: t log k is within " + std::to_string(guard) + " of a cot/sec pole");
    }

    auto const cosine_sum =
        chunked_parallel_sum([t](std::uint64_t n) {
            double const x = static_cast<double>(n);
            return std::cos(t * std::log(x)) / std::sqrt(x);
        }, k, options.chunk, options.workers);

    return (c / s) * ((0.25 + t * t) / (std::sqrt(static_cast<double>(k)) * c) * cosine_sum - 0.5);
}

enum class FixedPointMap
{
    f_map,
    g_map,
};

enum class TraceStatus
{
    converged,
    max_iters,
    diverged,
    singular_guard,
};

inline std::string_view to_string(FixedPointMap map) { return map == FixedPointMap::f_map ? "f" : "g"; }

inline std::string_view to_string(TraceStatus status)
{
    switch (status) {
    case TraceStatus::converged: return "CONVERGED";
    case TraceStatus::max_iters: return "MAX_ITERS";
    case TraceStatus::diverged: return "DIVERGED";
    case TraceStatus::singular_guard: return "SINGULAR_GUARD";
    }
    return "UNKNOWN";
}

struct FixedPointConfig
{
    FixedPointMap    map       = FixedPointMap::g_map;
    double           y0        = 14.2;
    std::uint64_t    k         = 100'000;
    std::uint64_t    max_iters = 1000;
    double           tol       = 1e-12;
    double           gamma_ref = kGammaRef;
    double           guard     = kSingularityGuard;
    ReductionOptions reduction;
};

struct FixedPointTrace
{
    FixedPointMap       map = FixedPointMap::g_map;
    std::vector<double> iterates;
    std::uint64_t       k      = 0;
    TraceStatus         status = TraceStatus::max_iters;
    /// |y_last - y_prev|; NaN while only y0 is present.
    double final_residual = std::numeric_limits<double>::quiet_NaN();
};

/// Applies f or g repeatedly from y0. Every way of stopping is reported as a
/// status; the only exceptions are for invalid configuration.
inline FixedPointTrace iterate_fixed_point(FixedPointConfig const& config)
{
    if (!(config.y0 > 0.0) || !std::isfinite(config.y0)) {
        throw domain_error("iterate_fixed_point: y0 must be positive and finite");
    }
    if (config.max_iters == 0) {
        throw domain_error("iterate_fixed_point: max_iters must be at least 1");
    }
    detail::require_k(config.k, 2, "iterate_fixed_point");

    FixedPointTrace trace;
    trace.map = config.map;
    trace.k   = config.k;
    trace.iterates.push_back(config.y0);

    double const upper = 10.0 * config.y0;
    for (std::uint64_t i = 0; i < config.max_iters; ++i) {
        double const previous = trace.iterates.back();
        double       next     = 0.0;
        try {
            next = config.map == FixedPointMap::g_map
                       ? g_of_t(previous, config.k, config.guard, config.reduction)
                       : f_of_t(previous, config.k, config.gamma_ref, config.reduction);
        } catch (singular_error const&) {
            trace.status = TraceStatus::singular_guard;
            return trace;
        }

        if (!std::isfinite(next)) {
            trace.status = TraceStatus::diverged;
            return trace;
        }
        trace.iterates.push_back(next);
        trace.final_residual = std::abs(next - previous);
        if (!(next > 0.0 && next < upper)) {
            trace.status = TraceStatus::diverged;
            return trace;
        }
        if (trace.final_residual <= config.tol) {
            trace.status = TraceStatus::converged;
            return trace;
        }
    }
    trace.status = TraceStatus::max_iters;
    return trace;
}

} // namespace zerogamma
