#include <alphamu/mc.hpp>

#include <gtest/gtest.h>

#include <cmath>

using namespace alphamu;

namespace {

McConfig small(std::uint64_t trials = 400'000) {
    McConfig c;
    c.trials = trials;
    c.worker_count = 2;
    return c;
}

RatioPair exp_pair() { return RatioPair(AlphaMuChannel::from_mean_snr(2, 1, 1), AlphaMuChannel::from_mean_snr(2, 1, 1)); }

}  // namespace

TEST(MonteCarlo, RatioCdfCoversAnalytic) {
    const auto r = estimate_ratio_cdf(exp_pair(), 3.0, small());
    EXPECT_TRUE(r.covers(0.75, 4.0));
    EXPECT_EQ(r.n_effective, 400'000u);
}

TEST(MonteCarlo, IndependentOfWorkerCount) {
    McConfig a = small(300'000);
    McConfig b = a;
    a.worker_count = 1;
    b.worker_count = 3;
    const RatioPair p(AlphaMuChannel::from_mean_snr(1.5, 0.6, 1), AlphaMuChannel::from_mean_snr(1.1, 1.0, 1));
    EXPECT_EQ(estimate_ratio_cdf(p, 0.7, a).estimate, estimate_ratio_cdf(p, 0.7, b).estimate);
    EXPECT_EQ(estimate_ratio_mgf(p, 0.7, a).estimate, estimate_ratio_mgf(p, 0.7, b).estimate);
}

TEST(MonteCarlo, StreamsDiffer) {
    const auto a = estimate_ratio_cdf(exp_pair(), 1.0, small(100'000));
    const auto b = estimate_ratio_cdf(exp_pair(), 1.0, small(100'000).with_stream(9));
    EXPECT_NE(a.estimate, b.estimate);
}

TEST(MonteCarlo, GridMatchesPointEstimates) {
    const auto grid = estimate_ratio_cdf_grid(exp_pair(), {0.5, 1.0, 3.0}, small(200'000));
    ASSERT_EQ(grid.size(), 3u);
    EXPECT_LE(grid[0].estimate, grid[1].estimate);
    EXPECT_LE(grid[1].estimate, grid[2].estimate);
    EXPECT_TRUE(grid[2].covers(0.75, 4.0));
}

TEST(MonteCarlo, MomentAndMgf) {
    const RatioPair p(AlphaMuChannel::from_mean_snr(2, 3, 1), AlphaMuChannel::from_mean_snr(2, 3, 1));
    EXPECT_TRUE(estimate_ratio_moment(p, 1.0, small()).covers(ratio_moment(p, 1.0), 4.0));
    EXPECT_TRUE(estimate_ratio_mgf(exp_pair(), 1.0, small()).covers(0.403652637676805925658921500631, 4.0));
}

TEST(MonteCarlo, HistogramDensity) {
    McConfig c = small();
    c.histogram_bins = 20;
    c.histogram_lo = 0.1;
    c.histogram_hi = 10.0;
    const Histogram h = estimate_ratio_histogram(exp_pair(), c);
    ASSERT_EQ(h.edges.size(), 21u);
    for (std::size_t i = 0; i < 20; ++i) {
        const double a = h.edges[i], b = h.edges[i + 1];
        const double expect = (b / (1 + b) - a / (1 + a)) / h.width(i);
        EXPECT_NEAR(h.density(i), expect, 4.0 * h.density_se(i)) << i;
    }
}

TEST(MonteCarlo, KsStatistics) {
    const auto xs = sample_ratio(exp_pair(), small(100'000));
    const auto cdf = [](double x) { return x / (1.0 + x); };
    const double exact = ks_statistic(xs, cdf);
    const double bound = ks_statistic_bound(xs, cdf, 2048);
    EXPECT_GE(bound + 1e-15, exact);
    EXPECT_LT(exact, ks_critical_1pct(xs.size()));
}

TEST(MonteCarlo, ZeroCountScoreCheck) {
    const McReport r{0.0, 0.0, std::nullopt, 1'000'000};
    EXPECT_FALSE(r.covers(1e-7));
    EXPECT_TRUE(r.covers_probability(1e-7));
    EXPECT_FALSE(r.covers_probability(1e-4));
}

TEST(MonteCarlo, ApplicationEstimators) {
    const auto ch = [](double a, double m, double s) { return AlphaMuChannel::from_mean_snr(a, m, s); };
    const auto sop = SecrecyScenario::with_threshold(ch(2, 1, 10), ch(2, 1, 1.26), 1.0);
    const auto bound = estimate_sop_bound(sop, small());
    EXPECT_TRUE(bound.covers_probability(sop_lower_bound(sop), 4.0));
    EXPECT_GE(estimate_sop_exact(sop, small()).estimate, bound.estimate - 4.0 * bound.standard_error);

    const auto cr = CognitiveScenario::with_threshold(ch(2, 1, 1), ch(2, 1, 1), ch(2, 1, 1), ch(2, 1, 1), 10.0, 1.0);
    EXPECT_TRUE(estimate_cr_outage(cr, small()).covers_probability(cognitive_outage(cr), 4.0));

    const auto fd = FullDuplexScenario::with_threshold(ch(2, 1, 1), ch(2, 1, 1), ch(2, 1, 0.1), 10.0, 1.0);
    EXPECT_TRUE(estimate_fd_outage(fd, small(), false).covers_probability(fullduplex_outage(fd), 4.0));
}

TEST(MonteCarlo, ConfigValidation) {
    McConfig c;
    c.trials = 10;
    EXPECT_THROW(c.validate(), DomainError);
}
