#include <alphamu/dists.hpp>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

using namespace alphamu;

TEST(AlphaMu, EnvelopePdfValue) {
    const auto ch = AlphaMuChannel::from_envelope(2.5, 1.7, 1.0, 1.0);
    EXPECT_NEAR(envelope_pdf(ch, 0.8), 1.240870476497791354448859, 1e-13);
}

TEST(AlphaMu, MeanSnrRoundTrip) {
    const auto ch = AlphaMuChannel::from_mean_snr(1.3, 2.2, 7.5);
    EXPECT_NEAR(ch.mean_snr(), 7.5, 1e-12);
    EXPECT_NEAR(snr_moment(ch, 1.0), 7.5, 1e-12);
    EXPECT_NEAR(ch.scaled(2.0).mean_snr(), 15.0, 1e-12);
}

TEST(AlphaMu, EnvelopeMomentsAgreeWithQuadrature) {
    const auto ch = AlphaMuChannel::from_envelope(1.8, 0.9, 1.3, 2.0);
    using boost::math::quadrature::gauss_kronrod;
    for (double n : {0.0, 1.0, 2.0, 3.5}) {
        const double q = gauss_kronrod<double, 61>::integrate(
            [&](double r) { return std::pow(r, n) * envelope_pdf(ch, r); }, 0.0, std::numeric_limits<double>::infinity(), 15, 1e-13);
        EXPECT_NEAR(envelope_moment(ch, n), q, 1e-9 * q) << n;
    }
}

TEST(AlphaMu, InverseMomentDivergence) {
    const auto ch = AlphaMuChannel::from_envelope(2.0, 1.0, 1.0, 1.0);
    EXPECT_THROW(inverse_envelope_moment(ch, 2.0), DivergenceError);
    EXPECT_NO_THROW(inverse_envelope_moment(ch, 1.5));
}

TEST(AlphaMu, RayleighSnrIsExponential) {
    const auto ch = AlphaMuChannel::from_mean_snr(2.0, 1.0, 3.0);
    for (double g : {0.1, 1.0, 5.0}) {
        EXPECT_NEAR(snr_pdf(ch, g), std::exp(-g / 3.0) / 3.0, 1e-14);
        EXPECT_NEAR(snr_cdf(ch, g), 1.0 - std::exp(-g / 3.0), 1e-14);
    }
}

TEST(AlphaMu, SnrPdfIntegratesToCdf) {
    const auto ch = AlphaMuChannel::from_mean_snr(0.8, 2.3, 1.5);
    // αμ/2 < 1: integrable singularity at the origin
    boost::math::quadrature::tanh_sinh<double> ts;
    const double q = ts.integrate([&](double g) { return snr_pdf(ch, g); }, 0.0, 2.0);
    EXPECT_NEAR(snr_cdf(ch, 2.0), q, 1e-10);
}

TEST(AlphaMu, ParameterValidation) {
    EXPECT_THROW(AlphaMuChannel::from_mean_snr(0.0, 1.0, 1.0), DomainError);
    EXPECT_THROW(AlphaMuChannel::from_mean_snr(1.0, -1.0, 1.0), DomainError);
    EXPECT_THROW(AlphaMuChannel::from_envelope(1.0, 1.0, 0.0, 1.0), DomainError);
}

TEST(AlphaMu, SamplerMatchesMoments) {
    const auto ch = AlphaMuChannel::from_mean_snr(1.5, 2.0, 4.0);
    const auto xs = sample_snr(ch, {7, 400'000, 3});
    const double mean = std::accumulate(xs.begin(), xs.end(), 0.0) / xs.size();
    double var = 0.0;
    for (double x : xs) var += (x - mean) * (x - mean);
    const double se = std::sqrt(var / (xs.size() - 1) / xs.size());
    EXPECT_NEAR(mean, 4.0, 4.0 * se);
}

TEST(AlphaMu, SamplingIsReproducible) {
    const auto ch = AlphaMuChannel::from_envelope(2.0, 0.7, 1.0, 1.0);
    EXPECT_EQ(sample_envelope(ch, {11, 1000, 2}), sample_envelope(ch, {11, 1000, 2}));
    EXPECT_NE(sample_envelope(ch, {11, 1000, 2}), sample_envelope(ch, {11, 1000, 3}));
}

TEST(Rng, GammaSmallShapeMean) {
    Xoshiro256 rng(5, 0);
    double s = 0.0;
    const int n = 400'000;
    for (int i = 0; i < n; ++i) s += rng.gamma(0.3);
    EXPECT_NEAR(s / n, 0.3, 4.0 * std::sqrt(0.3 / n));
}

TEST(Rng, UniformOpenInterval) {
    Xoshiro256 rng(1, 1);
    for (int i = 0; i < 100000; ++i) {
        const double u = rng.uniform();
        ASSERT_GT(u, 0.0);
        ASSERT_LT(u, 1.0);
    }
}
