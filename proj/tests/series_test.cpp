#include "zerogamma/series.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <gtest/gtest.h>

namespace zerogamma {
namespace {

using boost::multiprecision::cpp_rational;

constexpr double kT1  = 14.1347251417347;
constexpr double kT2  = 21.0220396387716;
constexpr double kT10 = 49.7738324776723;

// B_0..B_n by the Akiyama-Tanigawa recurrence over exact rationals.
std::vector<cpp_rational> exact_bernoulli(std::size_t n)
{
    std::vector<cpp_rational> out;
    std::vector<cpp_rational> row(n + 1);
    for (std::size_t m = 0; m <= n; ++m) {
        row[m] = cpp_rational(1, m + 1);
        for (std::size_t j = m; j >= 1; --j) {
            row[j - 1] = cpp_rational(j) * (row[j - 1] - row[j]);
        }
        out.push_back(row[0]);
    }
    out[1] = -out[1]; // B_1 = -1/2 convention; unused below
    return out;
}

TEST(BernoulliTable, MatchesExactRationals)
{
    BernoulliTable const table;
    auto const           exact = exact_bernoulli(2 * BernoulliTable::max_size);
    EXPECT_EQ(table.b2n(1), 1.0 / 6.0);
    EXPECT_EQ(table.b2n(2), -1.0 / 30.0);
    for (std::size_t n = 1; n <= table.size(); ++n) {
        EXPECT_EQ(table.b2n(n), static_cast<double>(exact[2 * n])) << "B_" << 2 * n;
    }
    EXPECT_THROW(BernoulliTable{3}, domain_error);
    EXPECT_THROW(BernoulliTable{BernoulliTable::max_size + 1}, domain_error);
}

TEST(HarmonicPartialSum, SmallValues)
{
    EXPECT_EQ(harmonic_partial_sum(1), 1.0);
    EXPECT_EQ(harmonic_partial_sum(2), 1.5);
    double const oracle = static_cast<double>(cpp_rational(7381, 2520));
    EXPECT_DOUBLE_EQ(harmonic_partial_sum(10), oracle);
    EXPECT_DOUBLE_EQ(harmonic_partial_sum(10), 2.928968253968254);
    EXPECT_THROW(harmonic_partial_sum(0), domain_error);
}

TEST(HarmonicAsymptotic, AgreesWithPartialSums)
{
    BernoulliTable const table;
    double const         gamma = 0.5772156649015329;
    double const         h10   = static_cast<double>(cpp_rational(7381, 2520));
    // Two correction terms leave the B6 term, 1/(252 k^6) ~ 3.97e-9 at k = 10;
    // a third brings the error under 1e-9.
    double const         first_omitted = table.b2n(3) / (6.0 * 1e6);
    EXPECT_NEAR(harmonic_asymptotic(10, gamma, 2, table), h10, 1.01 * first_omitted);
    EXPECT_NEAR(harmonic_asymptotic(10, gamma, 3, table), h10, 1e-9);
    EXPECT_EQ(harmonic_asymptotic(1, 0.0, 0, table), 0.5);

    double const h_million = harmonic_partial_sum(1'000'000);
    EXPECT_LE(std::abs(harmonic_asymptotic(1'000'000, gamma, 3, table) - h_million) / h_million, 1e-14);

    EXPECT_THROW(harmonic_asymptotic(10, gamma, table.size() + 1, table), domain_error);
    EXPECT_THROW(harmonic_asymptotic(0, gamma, 1, table), domain_error);
}

TEST(StieltjesEstimate, FirstThreeConstants)
{
    EXPECT_NEAR(stieltjes_estimate(0, 1'000'000), kGammaRef, 1e-6);
    EXPECT_NEAR(stieltjes_estimate(1, 1'000'000), -0.072815, 1e-4);
    EXPECT_NEAR(stieltjes_estimate(2, 1'000'000), -0.009690, 1e-4);
    EXPECT_THROW(stieltjes_estimate(0, 1), domain_error);
}

TEST(TrigSums, SingleTerm)
{
    for (double t : {0.0, 1.0, kT1, 1234.5}) {
        auto const sums = trig_sums({0.5, t, 1}, true);
        EXPECT_EQ(sums.cos_sum, -1.0);
        EXPECT_EQ(sums.sin_sum, 0.0);
        EXPECT_TRUE(sums.alternating);
    }
}

TEST(TrigSums, TwoTermsAtZeroOrdinate)
{
    auto const sums = trig_sums({0.5, 0.0, 2}, true);
    EXPECT_DOUBLE_EQ(sums.cos_sum, -1.0 + 1.0 / std::sqrt(2.0));
    EXPECT_NEAR(sums.cos_sum, -0.292893218813452, 1e-15);
    EXPECT_EQ(sums.sin_sum, 0.0);
}

TEST(TrigSums, SineSumVanishesAtZeroOrdinate)
{
    for (double sigma : {0.1, 0.5, 0.9}) {
        for (std::uint64_t k : {1u, 2u, 3u, 17u, 1000u, 4097u}) {
            EXPECT_EQ(trig_sums({sigma, 0.0, k}, true).sin_sum, 0.0);
            EXPECT_EQ(trig_sums({sigma, 0.0, k}, false).sin_sum, 0.0);
        }
    }
}

TEST(TrigSums, RejectsBadParameters)
{
    EXPECT_THROW(trig_sums({0.5, 1.0, 0}, true), domain_error);
    EXPECT_THROW(trig_sums({0.0, 1.0, 5}, true), domain_error);
    EXPECT_THROW(trig_sums({1.0, 1.0, 5}, false), domain_error);
}

TEST(TrigSums, AsymptoticEquationsAtZeros)
{
    // The truncated non-alternating sums to k-1 track the asymptotic right-hand
    // sides up to the next Euler-Maclaurin term, |k^{-s}|/2 = 1/(2 sqrt k).
    std::uint64_t const k = 100'000;
    double const        tolerance = 1.0 / std::sqrt(static_cast<double>(k));
    for (double t : {kT1, kT2}) {
        auto const lhs = trig_sums({0.5, t, k - 1}, false);
        auto const rhs = em_rhs(t, k);
        EXPECT_TRUE(std::isfinite(lhs.cos_sum) && std::isfinite(lhs.sin_sum));
        EXPECT_NEAR(lhs.cos_sum, rhs.cos_side, tolerance) << "t = " << t;
        EXPECT_NEAR(lhs.sin_sum, rhs.sin_side, tolerance) << "t = " << t;
    }
}

TEST(EmRhs, UnitOrdinateSingleTerm)
{
    auto const rhs = em_rhs(1.0, 1);
    EXPECT_DOUBLE_EQ(rhs.cos_side, 0.4);
    EXPECT_DOUBLE_EQ(rhs.sin_side, -0.8);
}

TEST(CSquared, ClosedFormValues)
{
    EXPECT_NEAR(c_squared(0.5, 0.0), 1.0 / (3.0 - 2.0 * std::numbers::sqrt2), 1e-13);
    EXPECT_NEAR(c_squared(0.5, 0.0), 5.82842712474619, 1e-13);
    EXPECT_NEAR(c_squared(0.5, std::numbers::pi / std::numbers::ln2), 0.171572875253810, 1e-15);
    EXPECT_GT(c_squared(0.5, kT1), 0.0);
    EXPECT_THROW(c_squared(0.0, 1.0), domain_error);
    EXPECT_THROW(c_squared(1.0, 1.0), domain_error);
}

TEST(CSquared, PositiveAndMatchesDirectFormulaOnGrid)
{
    for (int i = 1; i <= 99; ++i) {
        double const sigma = 0.01 * i;
        for (int j = 0; j <= 400; ++j) {
            double const t     = 0.25 * j;
            double const value = c_squared(sigma, t);
            ASSERT_GT(value, 0.0) << sigma << ", " << t;
            double const direct =
                1.0 / (1.0 + std::pow(2.0, 2.0 * (1.0 - sigma)) - std::pow(2.0, 2.0 - sigma) * std::cos(t * std::log(2.0)));
            ASSERT_NEAR(value, direct, 1e-9 * value) << sigma << ", " << t;
        }
    }
}

TEST(ZetaMagSqAlternating, NearZeroAtFirstOrdinate)
{
    EXPECT_LT(zeta_mag_sq_alternating({0.5, kT1, 100'000}), 1e-6);
}

TEST(ZetaMagSqAlternating, SingleTermIsPrefactor)
{
    for (double t : {0.0, 3.0, kT1}) {
        EXPECT_DOUBLE_EQ(zeta_mag_sq_alternating({0.5, t, 1}), c_squared(0.5, t));
    }
}

TEST(ZetaMagSqAlternating, RealAxisApproachesEta)
{
    // eta(1/2) by averaging consecutive partial sums of the alternating series
    // (the first Euler transform step), independent of the library path.
    double const        eta_half = 0.604898643421630;
    std::uint64_t const k        = 10'000;

    double partial = 0.0;
    double previous = 0.0;
    for (std::uint64_t n = 1; n <= k + 1; ++n) {
        previous = partial;
        partial += (n % 2 == 1 ? 1.0 : -1.0) / std::sqrt(static_cast<double>(n));
    }
    EXPECT_NEAR(0.5 * (partial + previous), eta_half, 1e-6);

    auto const sums = trig_sums({0.5, 0.0, k}, true);
    EXPECT_NEAR(sums.cos_sum, -previous, 1e-12);

    double const c2    = c_squared(0.5, 0.0);
    double const value = zeta_mag_sq_alternating({0.5, 0.0, k});
    double const slack = c2 * (2.0 * eta_half / std::sqrt(static_cast<double>(k)) + 1.0 / static_cast<double>(k));
    EXPECT_NEAR(value, c2 * eta_half * eta_half, slack);
}

TEST(ZetaMagSqAlternating, NeverNegative)
{
    std::mt19937_64                        rng(7);
    std::uniform_real_distribution<double> sigma(0.05, 0.95);
    std::uniform_real_distribution<double> t(0.0, 200.0);
    std::uniform_int_distribution<int>     k(1, 3000);
    for (int i = 0; i < 100; ++i) {
        EXPECT_GE(zeta_mag_sq_alternating({sigma(rng), t(rng), static_cast<std::uint64_t>(k(rng))}), 0.0);
    }
}

TEST(OffDiagonal, TwoTermsByHand)
{
    EXPECT_NEAR(offdiag_naive({0.5, 0.0, 2}, true), -std::numbers::sqrt2, 1e-15);
    EXPECT_NEAR(offdiag_naive({0.5, 0.0, 2}, false), std::numbers::sqrt2, 1e-15);
    EXPECT_NEAR(offdiag_factorized({0.5, 0.0, 2}, true), -std::numbers::sqrt2, 1e-15);
    EXPECT_NEAR(offdiag_factorized({0.5, 0.0, 2}, false), std::numbers::sqrt2, 1e-15);
}

TEST(OffDiagonal, SingleTermHasNoPairs)
{
    for (bool alternating : {true, false}) {
        EXPECT_EQ(offdiag_naive({0.5, 0.0, 1}, alternating), 0.0);
        EXPECT_EQ(offdiag_factorized({0.5, 0.0, 1}, alternating), 0.0);
    }
}

TEST(OffDiagonal, FactorizedMatchesNaiveAtFirstZero)
{
    SeriesParams const params{0.5, kT1, 50};
    EXPECT_NEAR(offdiag_factorized(params, true), offdiag_naive(params, true), 1e-12);
    EXPECT_NEAR(offdiag_factorized(params, false), offdiag_naive(params, false), 1e-12);
}

TEST(OffDiagonal, FactorizedMatchesNaiveOnRandomInputs)
{
    std::mt19937_64                        rng(12345);
    std::uniform_real_distribution<double> ordinate(0.1, 100.0);
    std::uniform_int_distribution<int>     length(1, 200);
    for (int i = 0; i < 50; ++i) {
        SeriesParams const params{0.5, ordinate(rng), static_cast<std::uint64_t>(length(rng))};
        for (bool alternating : {true, false}) {
            double const naive      = offdiag_naive(params, alternating);
            double const factorized = offdiag_factorized(params, alternating);
            EXPECT_LE(std::abs(naive - factorized), 1e-11 * std::max(1.0, std::abs(naive)))
                << "t = " << params.t << ", k = " << params.k << ", alternating = " << alternating;
        }
    }
}

TEST(OffDiagonal, GeneralAbscissaAlsoFactorizes)
{
    for (double sigma : {0.25, 0.75}) {
        SeriesParams const params{sigma, 7.5, 120};
        EXPECT_NEAR(offdiag_factorized(params, true), offdiag_naive(params, true), 1e-11);
        EXPECT_NEAR(offdiag_factorized(params, false), offdiag_naive(params, false), 1e-11);
    }
}

TEST(OffDiagonal, NaiveRespectsOracleCap)
{
    EXPECT_THROW(offdiag_naive({0.5, kT1, kDefaultOracleCap + 1}, true), domain_error);
    EXPECT_THROW(offdiag_naive({0.5, kT1, 11}, true, 10), domain_error);
    EXPECT_NO_THROW(offdiag_naive({0.5, kT1, 10}, true, 10));
}

TEST(GammaType1, PublishedValues)
{
    EXPECT_NEAR(gamma_type1(kT1, 100).value, 0.579707476081083, 1e-9);
    EXPECT_NEAR(gamma_type1(kT1, 100'000).value, 0.577218164898902, 1e-9);
    EXPECT_NEAR(gamma_type1(kT2, 100'000).value, 0.577218164886766, 1e-9);

    auto const estimate = gamma_type1(kT1, 100);
    EXPECT_EQ(estimate.method, GammaMethod::alt_type1);
    EXPECT_EQ(estimate.k, 100u);
    EXPECT_EQ(estimate.t_q, kT1);
}

TEST(GammaType1, AgreesWithNaiveDoubleSum)
{
    for (std::uint64_t k : {2u, 10u, 100u, 1000u, 10000u}) {
        double const naive = -offdiag_naive({0.5, kT1, k}, true) - std::log(static_cast<double>(k));
        EXPECT_NEAR(gamma_type1(kT1, k).value, naive, 1e-10) << "k = " << k;
    }
}

TEST(GammaType1, ErrorShrinksWithTruncation)
{
    double previous = std::numeric_limits<double>::infinity();
    for (std::uint64_t k = 10; k <= 100'000; k *= 10) {
        double const error = std::abs(gamma_type1(kT1, k).value - kGammaRef);
        EXPECT_LT(error, previous) << "k = " << k;
        previous = error;
    }
}

TEST(GammaType1, RejectsBadArguments)
{
    EXPECT_THROW(gamma_type1(kT1, 1), domain_error);
    EXPECT_THROW(gamma_type1(0.0, 100), domain_error);
    EXPECT_THROW(gamma_type1(-kT1, 100), domain_error);
}

TEST(GammaType2, PublishedValues)
{
    EXPECT_NEAR(gamma_type2(kT1, 10).value, 0.624430642787654, 1e-9);
    EXPECT_NEAR(gamma_type2(kT1, 100).value, 0.583918804120366, 1e-9);
    EXPECT_NEAR(gamma_type2(kT1, 100'000).value, 0.579719325600715, 1e-9);
    EXPECT_NEAR(gamma_type2(kT10, 100'000).value, 0.577421632805789, 1e-9);
    EXPECT_EQ(gamma_type2(kT1, 100).method, GammaMethod::nonalt_type2);
}

TEST(GammaType2, SumsRunToOneBelowK)
{
    // (K + 1)/(1/4 + t^2) - offdiag(K) - log K with K = k - 1, via the double loop.
    for (std::uint64_t k : {2u, 10u, 100u, 1000u}) {
        std::uint64_t const inner = k - 1;
        double const        naive = static_cast<double>(inner + 1) / (0.25 + kT1 * kT1) -
                             offdiag_naive({0.5, kT1, inner}, false) - std::log(static_cast<double>(inner));
        EXPECT_NEAR(gamma_type2(kT1, k).value, naive, 1e-10) << "k = " << k;
    }
}

TEST(ZetaEm, ZetaOfTwo)
{
    double const zeta2 = std::numbers::pi * std::numbers::pi / 6.0;
    EXPECT_NEAR(zeta_em(2.0, 0.0, 100, EmOrder::half_term).real(), zeta2, 1e-5);
    EXPECT_NEAR(zeta_em(2.0, 0.0, 1000, EmOrder::half_term).real(), zeta2, 1e-6);
    EXPECT_EQ(zeta_em(2.0, 0.0, 100, EmOrder::half_term).imag(), 0.0);
}

TEST(ZetaEm, PoleOnlyTwoTerms)
{
    auto const value = zeta_em(2.0, 0.0, 2, EmOrder::pole_only);
    EXPECT_DOUBLE_EQ(value.real(), 1.5);
    EXPECT_EQ(value.imag(), 0.0);
}

TEST(ZetaEm, SmallAtFirstZero)
{
    EXPECT_LT(std::abs(zeta_em(0.5, kT1, 100'000, EmOrder::half_term)), 1e-3);
}

TEST(ZetaEm, HigherOrderIsNoWorse)
{
    double const zeta2 = std::numbers::pi * std::numbers::pi / 6.0;
    for (std::uint64_t k : {10u, 100u, 1000u}) {
        double const half = std::abs(zeta_em(2.0, 0.0, k, EmOrder::half_term).real() - zeta2);
        double const b2   = std::abs(zeta_em(2.0, 0.0, k, EmOrder::b2_term).real() - zeta2);
        EXPECT_LE(b2, half) << "k = " << k;
    }
}

TEST(ZetaEm, RejectsPoleAndShortSums)
{
    EXPECT_THROW(zeta_em(1.0, 0.0, 100, EmOrder::half_term), domain_error);
    EXPECT_THROW(zeta_em(2.0, 0.0, 1, EmOrder::half_term), domain_error);
}

} // namespace
} // namespace zerogamma
