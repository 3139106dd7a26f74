#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "zerogamma/errors.hpp"
#include "zerogamma/summation.hpp"

namespace zerogamma {

/// Euler-Mascheroni constant at the 15 digits used throughout as the reference value.
inline constexpr double kGammaRef = 0.577215664901533;

/// Largest k accepted by offdiag_naive unless the caller raises the cap.
inline constexpr std::uint64_t kDefaultOracleCap = 50'000;

/// s = sigma + i t together with a truncation length k.
struct SeriesParams
{
    double        sigma = 0.5;
    double        t     = 0.0;
    std::uint64_t k     = 1;
};

/// Paired cosine/sine partial sums.
///
/// Alternating: cos_sum = sum (-1)^n cos(t log n)/n^sigma and
/// sin_sum = -sum (-1)^n sin(t log n)/n^sigma, the real and imaginary parts of
/// the eta series with the sign flipped. Non-alternating: the plain sums of
/// cos(t log n)/n^sigma and sin(t log n)/n^sigma.
struct TrigSums
{
    double       cos_sum     = 0.0;
    double       sin_sum     = 0.0;
    bool         alternating = false;
    SeriesParams params;
};

enum class GammaMethod
{
    alt_type1,
    nonalt_type2,
};

inline std::string_view to_string(GammaMethod method)
{
    return method == GammaMethod::alt_type1 ? "type1" : "type2";
}

struct GammaEstimate
{
    double                       value = 0.0;
    GammaMethod                  method = GammaMethod::alt_type1;
    std::optional<std::uint64_t> q;
    double                       t_q = 0.0;
    std::uint64_t                k   = 0;
};

/// Even-index Bernoulli numbers B2, B4, ... rendered from their exact rationals.
class BernoulliTable
{
public:
    static constexpr std::size_t max_size = 10;

    explicit BernoulliTable(std::size_t count = max_size)
    {
        // numerator, denominator of B_{2n}
        static constexpr std::array<std::array<double, 2>, max_size> exact{{
            {1.0, 6.0},
            {-1.0, 30.0},
            {1.0, 42.0},
            {-1.0, 30.0},
            {5.0, 66.0},
            {-691.0, 2730.0},
            {7.0, 6.0},
            {-3617.0, 510.0},
            {43867.0, 798.0},
            {-174611.0, 330.0},
        }};
        if (count < 4 || count > max_size) {
            throw domain_error("BernoulliTable: length must be in [4, " + std::to_string(max_size) + "]");
        }
        values_.reserve(count);
        for (std::size_t i = 0; i < count; ++i) {
            values_.push_back(exact[i][0] / exact[i][1]);
        }
    }

    [[nodiscard]] std::size_t size() const noexcept { return values_.size(); }

    /// B_{2n} for n = 1..size().
    [[nodiscard]] double b2n(std::size_t n) const { return values_.at(n - 1); }

    [[nodiscard]] std::vector<double> const& values() const noexcept { return values_; }

private:
    std::vector<double> values_;
};

namespace detail {

inline void require_strip(double sigma, char const* what)
{
    if (!(sigma > 0.0 && sigma < 1.0)) {
        throw domain_error(std::string(what) + ": sigma must lie in (0, 1)");
    }
}

inline void require_k(std::uint64_t k, std::uint64_t minimum, char const* what)
{
    if (k < minimum) {
        throw domain_error(std::string(what) + ": k must be at least " + std::to_string(minimum));
    }
}

inline double inverse_power(std::uint64_t n, double sigma)
{
    auto const x = static_cast<double>(n);
    return sigma == 0.5 ? 1.0 / std::sqrt(x) : std::pow(x, -sigma);
}

/// One pass over n = 1..k returning {sum c_n cos, sum c_n sin, sum n^{-2 sigma}}
/// where c_n = (-1)^n n^{-sigma} when alternating, n^{-sigma} otherwise.
inline std::array<double, 3> trig_and_diagonal(SeriesParams const& params, bool alternating,
                                               ReductionOptions const& options)
{
    auto const term = [&](std::uint64_t n) {
        double const weight = inverse_power(n, params.sigma);
        double const phase  = params.t * std::log(static_cast<double>(n));
        double const signed_weight = (alternating && (n % 2 == 1)) ? -weight : weight;
        return std::array<double, 3>{signed_weight * std::cos(phase), signed_weight * std::sin(phase),
                                     weight * weight};
    };
    return chunked_parallel_reduce<3>(term, params.k, options);
}

} // namespace detail

/// H_k = 1 + 1/2 + ... + 1/k.
inline double harmonic_partial_sum(std::uint64_t k, ReductionOptions const& options = {})
{
    detail::require_k(k, 1, "harmonic_partial_sum");
    return chunked_parallel_sum([](std::uint64_t n) { return 1.0 / static_cast<double>(n); }, k, options.chunk,
                                options.workers);
}

/// gamma + log k + 1/(2k) - sum_{n=1..n_terms} B_{2n} / (2n k^{2n}).
inline double harmonic_asymptotic(std::uint64_t k, double gamma, std::size_t n_terms, BernoulliTable const& bernoulli)
{
    detail::require_k(k, 1, "harmonic_asymptotic");
    if (n_terms > bernoulli.size()) {
        throw domain_error("harmonic_asymptotic: n_terms exceeds the Bernoulli table");
    }
    auto const  kd = static_cast<double>(k);
    double      tail = 0.0;
    double const inv_k2 = 1.0 / (kd * kd);
    double      power = 1.0;
    for (std::size_t n = 1; n <= n_terms; ++n) {
        power *= inv_k2;
        tail += bernoulli.b2n(n) / (2.0 * static_cast<double>(n)) * power;
    }
    return gamma + std::log(kd) + 0.5 / kd - tail;
}

/// Truncated Stieltjes constant: sum_{j<=m} (log j)^n / j - (log m)^{n+1} / (n+1).
inline double stieltjes_estimate(unsigned n, std::uint64_t m, ReductionOptions const& options = {})
{
    if (m < 2) {
        throw domain_error("stieltjes_estimate: m must be at least 2");
    }
    auto const term = [n](std::uint64_t j) {
        auto const x = static_cast<double>(j);
        return std::pow(std::log(x), static_cast<double>(n)) / x;
    };
    double const sum = chunked_parallel_sum(term, m, options.chunk, options.workers);
    return sum - std::pow(std::log(static_cast<double>(m)), static_cast<double>(n) + 1.0) / (n + 1.0);
}

inline TrigSums trig_sums(SeriesParams const& params, bool alternating, ReductionOptions const& options = {})
{
    detail::require_k(params.k, 1, "trig_sums");
    detail::require_strip(params.sigma, "trig_sums");
    auto const sums = detail::trig_and_diagonal(params, alternating, options);
    return TrigSums{
        .cos_sum     = sums[0],
        .sin_sum     = alternating ? -sums[1] : sums[1],
        .alternating = alternating,
        .params      = params,
    };
}

/// 1 / (1 + 2^{2(1-sigma)} - 2^{2-sigma} cos(t log 2)), the squared modulus of
/// the eta-to-zeta prefactor.
inline double c_squared(double sigma, double t)
{
    detail::require_strip(sigma, "c_squared");
    // (1 - a)^2 + 2a (1 - cos) with a = 2^{1-sigma}: the same denominator,
    // written as a sum of nonnegative terms.
    double const a = std::exp2(1.0 - sigma);
    double const one_minus_cos = 2.0 * std::pow(std::sin(0.5 * t * std::numbers::ln2), 2);
    return 1.0 / ((1.0 - a) * (1.0 - a) + 2.0 * a * one_minus_cos);
}

/// C^2 (A^2 + B^2) at truncation k; tends to |zeta(s)|^2.
inline double zeta_mag_sq_alternating(SeriesParams const& params, ReductionOptions const& options = {})
{
    auto const c2   = c_squared(params.sigma, params.t);
    auto const sums = trig_sums(params, true, options);
    return c2 * (sums.cos_sum * sums.cos_sum + sums.sin_sum * sums.sin_sum);
}

/*!
    Doubled off-diagonal sum by explicit double loop:

        2 sum_{n=1..k} sum_{m=n+1..k} s_mn / (m n)^sigma * cos(t log(m/n))

    with s_mn = (-1)^m (-1)^n when alternating, 1 otherwise. O(k^2); this is the
    brute-force reference for offdiag_factorized and refuses k above `cap`.
*/
inline double offdiag_naive(SeriesParams const& params, bool alternating, std::uint64_t cap = kDefaultOracleCap)
{
    detail::require_k(params.k, 1, "offdiag_naive");
    detail::require_strip(params.sigma, "offdiag_naive");
    if (params.k > cap) {
        throw domain_error("offdiag_naive: k = " + std::to_string(params.k) + " exceeds the oracle cap of " +
                           std::to_string(cap));
    }

    auto const          k = static_cast<std::size_t>(params.k);
    std::vector<double> logs(k + 1);
    std::vector<double> weights(k + 1);
    for (std::size_t n = 1; n <= k; ++n) {
        logs[n]    = std::log(static_cast<double>(n));
        weights[n] = detail::inverse_power(n, params.sigma);
    }

    SumAccumulator total;
    for (std::size_t n = 1; n <= k; ++n) {
        SumAccumulator row;
        for (std::size_t m = n + 1; m <= k; ++m) {
            double const sign = (alternating && ((m + n) % 2 == 1)) ? -1.0 : 1.0;
            row.add(sign * weights[m] * weights[n] * std::cos(params.t * (logs[m] - logs[n])));
        }
        total.merge(row);
    }
    return 2.0 * total.value();
}

/// Off-diagonal sum as cos_sum^2 + sin_sum^2 minus the diagonal sum of n^{-2 sigma}.
/// Equal to offdiag_naive at every finite k, in O(k).
inline double offdiag_factorized(SeriesParams const& params, bool alternating, ReductionOptions const& options = {})
{
    detail::require_k(params.k, 1, "offdiag_factorized");
    detail::require_strip(params.sigma, "offdiag_factorized");
    auto const sums = detail::trig_and_diagonal(params, alternating, options);
    return (sums[0] * sums[0] + sums[1] * sums[1]) - sums[2];
}

namespace detail {

inline void require_zero_ordinate(double t_q, std::uint64_t k, char const* what)
{
    require_k(k, 2, what);
    if (!(t_q > 0.0) || !std::isfinite(t_q)) {
        throw domain_error(std::string(what) + ": t_q must be positive and finite");
    }
}

} // namespace detail

/// gamma from the alternating series at a zero ordinate:
/// -offdiag(alternating) - log k, the sign absorbed into the (-1)^{n+1} index.
inline GammaEstimate gamma_type1(double t_q, std::uint64_t k, ReductionOptions const& options = {})
{
    detail::require_zero_ordinate(t_q, k, "gamma_type1");
    double const off = offdiag_factorized({0.5, t_q, k}, true, options);
    return GammaEstimate{
        .value  = -off - std::log(static_cast<double>(k)),
        .method = GammaMethod::alt_type1,
        .q      = std::nullopt,
        .t_q    = t_q,
        .k      = k,
    };
}

/*!
    gamma from the non-alternating series at a zero ordinate.

    Computed as

        k / (1/4 + t_q^2) - offdiag(non-alternating, to k - 1) - log(k - 1),

    i.e. the sums run to k - 1, the upper limit of the truncated zeta series the
    formula is derived from, and the leading term carries k. Written with
    K = k - 1 this is (K + 1)/(1/4 + t_q^2) - offdiag(K) - log K.
*/
inline GammaEstimate gamma_type2(double t_q, std::uint64_t k, ReductionOptions const& options = {})
{
    detail::require_zero_ordinate(t_q, k, "gamma_type2");
    std::uint64_t const inner = k - 1;
    double const        lead  = static_cast<double>(k) / (0.25 + t_q * t_q);
    double const        off   = offdiag_factorized({0.5, t_q, inner}, false, options);
    return GammaEstimate{
        .value  = lead - off - std::log(static_cast<double>(inner)),
        .method = GammaMethod::nonalt_type2,
        .q      = std::nullopt,
        .t_q    = t_q,
        .k      = k,
    };
}

enum class EmOrder
{
    pole_only,
    half_term,
    b2_term,
};

/// Euler-Maclaurin continuation of zeta:
/// sum_{n<k} n^{-s} - k^{1-s}/(1-s) [+ k^{-s}/2 [+ (B2/2) s k^{-s-1}]].
inline std::complex<double> zeta_em(double sigma, double t, std::uint64_t k, EmOrder order,
                                    ReductionOptions const& options = {})
{
    detail::require_k(k, 2, "zeta_em");
    if (sigma == 1.0 && t == 0.0) {
        throw domain_error("zeta_em: s = 1 is the pole");
    }
    std::complex<double> const s{sigma, t};

    auto const term = [&](std::uint64_t n) {
        double const log_n  = std::log(static_cast<double>(n));
        double const weight = std::exp(-sigma * log_n);
        return std::array<double, 2>{weight * std::cos(t * log_n), -weight * std::sin(t * log_n)};
    };
    auto const sums = chunked_parallel_reduce<2>(term, k - 1, options);

    double const               log_k = std::log(static_cast<double>(k));
    std::complex<double> const k_pow_minus_s = std::exp(-s * log_k);
    std::complex<double>       value{sums[0], sums[1]};
    value -= static_cast<double>(k) * k_pow_minus_s / (1.0 - s);
    if (order != EmOrder::pole_only) {
        value += 0.5 * k_pow_minus_s;
    }
    if (order == EmOrder::b2_term) {
        double const b2 = BernoulliTable{}.b2n(1);
        value += 0.5 * b2 * s * k_pow_minus_s / static_cast<double>(k);
    }
    return value;
}

/// Right-hand sides of the cosine and sine asymptotic equations at a zero.
struct EmPair
{
    double cos_side = 0.0;
    double sin_side = 0.0;
};

/// sqrt(k) / (1/4 + t^2) * (cos(t log k)/2 + t sin(t log k), sin(t log k)/2 - t cos(t log k)).
/// Compare with trig_sums({1/2, t_q, k - 1}, false).
inline EmPair em_rhs(double t_q, std::uint64_t k)
{
    detail::require_k(k, 1, "em_rhs");
    if (!(t_q > 0.0)) {
        throw domain_error("em_rhs: t_q must be positive");
    }
    double const scale = std::sqrt(static_cast<double>(k)) / (0.25 + t_q * t_q);
    double const phase = t_q * std::log(static_cast<double>(k));
    double const c     = std::cos(phase);
    double const s     = std::sin(phase);
    return EmPair{scale * (0.5 * c + t_q * s), scale * (0.5 * s - t_q * c)};
}

} // namespace zerogamma
