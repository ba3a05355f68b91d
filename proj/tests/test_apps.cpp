#include <alphamu/apps.hpp>

#include <gtest/gtest.h>

#include <cmath>

using namespace alphamu;

namespace {

AlphaMuChannel ch(double a, double m, double snr) { return AlphaMuChannel::from_mean_snr(a, m, snr); }

}  // namespace

TEST(Secrecy, RayleighClosedForm) {
    for (double gb : {1.0, 10.0, 100.0}) {
        const double ge = 1.2589254117941673;
        const auto sc = SecrecyScenario::with_threshold(ch(2, 1, gb), ch(2, 1, ge), 2.0);
        EXPECT_NEAR(sop_lower_bound(sc), 2.0 * ge / (gb + 2.0 * ge), 1e-12);
    }
}

TEST(Secrecy, ThresholdAndRate) {
    const auto sc = SecrecyScenario::with_threshold(ch(2, 1, 1), ch(2, 1, 1), 4.0);
    EXPECT_DOUBLE_EQ(sc.rate_threshold, 2.0);
    EXPECT_DOUBLE_EQ(sc.tau1(), 4.0);
    EXPECT_THROW(SecrecyScenario::with_threshold(ch(2, 1, 1), ch(2, 1, 1), 0.5), DomainError);
}

TEST(Secrecy, BoundDecreasesWithMainSnr) {
    double prev = 1.0;
    for (double db = 0; db <= 30; db += 5) {
        const double p = sop_lower_bound(SecrecyScenario::with_threshold(ch(3.9, 1, std::pow(10, db / 10)), ch(1.3, 1, 1.26), 1.0));
        EXPECT_LT(p, prev);
        prev = p;
    }
}

TEST(Cognitive, RayleighClosedForm) {
    const double g = 1.3;
    const double i = 10.0;
    const auto sc = CognitiveScenario::with_threshold(ch(2, 1, g), ch(2, 1, g), ch(2, 1, g), ch(2, 1, g), i, 1.0);
    const double f = 1.0 / (i + 1.0);
    EXPECT_NEAR(cognitive_outage(sc), 2 * f - f * f, 1e-12);
    EXPECT_NEAR(sc.tau2(), 1.0, 1e-15);
}

TEST(FullDuplex, RayleighClosedForm) {
    const double gp = 100.0;
    const double rr = 0.01;
    const auto sc = FullDuplexScenario::with_threshold(ch(2, 1, 1), ch(2, 1, 1), FullDuplexScenario::rayleigh_rr(rr), gp, 1.0);
    const double f4 = rr / (1.0 + rr);
    const double f5 = 1.0 - std::exp(-1.0 / (0.5 * gp));
    EXPECT_NEAR(fullduplex_floor(sc), f4, 1e-12);
    EXPECT_NEAR(fullduplex_outage(sc), f4 + f5 - f4 * f5, 1e-12);
}

TEST(FullDuplex, OutageApproachesFloor) {
    const auto at = [](double gp) {
        return FullDuplexScenario::with_threshold(ch(1.9, 2.3, 1), ch(2.2, 2.9, 1), ch(2.1, 2.8, 0.01), gp, 1.0);
    };
    EXPECT_LT(fullduplex_outage(at(1e6)) - fullduplex_floor(at(1e6)), 1e-10);
    EXPECT_GT(fullduplex_outage(at(1.0)), fullduplex_outage(at(100.0)));
}
