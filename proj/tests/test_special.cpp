#include <alphamu/special.hpp>

#include <gtest/gtest.h>

#include <cmath>

using namespace alphamu;

TEST(LogGamma, ComplexArgument) {
    const complex v = log_gamma(complex(2.0, 3.0));
    EXPECT_NEAR(v.real(), -2.092851753092733349564189, 1e-13);
    EXPECT_NEAR(v.imag(), 2.302396543466867626153708, 1e-13);
}

TEST(LogGamma, RealMatchesStd) {
    for (double x : {0.1, 0.5, 1.0, 2.5, 7.0, 30.0, 170.5}) {
        EXPECT_NEAR(log_gamma(x), std::lgamma(x), 1e-12 * std::max(1.0, std::abs(std::lgamma(x)))) << x;
    }
}

TEST(LogGamma, SignedNegativeArgument) {
    const SignedLog g = log_gamma_signed(-2.5);
    EXPECT_NEAR(g.log_abs, -0.05624371649767405067259453, 1e-13);
    EXPECT_EQ(g.sign, -1);
}

TEST(LogGamma, ConjugateSymmetry) {
    const complex a = log_gamma(complex(0.7, -4.2));
    const complex b = log_gamma(complex(0.7, 4.2));
    EXPECT_NEAR(a.real(), b.real(), 1e-14);
    EXPECT_NEAR(a.imag(), -b.imag(), 1e-13);
}

TEST(LogGamma, RecurrenceFarOut) {
    const complex s(3.3, 40.0);
    const complex d = log_gamma(s + 1.0) - log_gamma(s) - std::log(s);
    EXPECT_NEAR(std::cos(d.imag()), 1.0, 1e-12);
    EXPECT_NEAR(d.real(), 0.0, 1e-11);
}

TEST(Digamma, KnownValues) {
    EXPECT_NEAR(digamma(0.3), -3.502524222200133124915351, 1e-12);
    EXPECT_NEAR(digamma(7.5), 1.946757484246086788069291, 1e-13);
}

TEST(RegularizedGamma, KnownValue) {
    EXPECT_NEAR(regularized_lower_gamma(2.5, 3.7), 0.8074495669206042685019091, 1e-13);
    EXPECT_NEAR(regularized_lower_gamma(1.0, 2.0), 1.0 - std::exp(-2.0), 1e-14);
    EXPECT_EQ(regularized_lower_gamma(3.0, 0.0), 0.0);
}

TEST(CompensatedSum, RecoversCancellation) {
    CompensatedSum s;
    s.add(1.0);
    s.add(1e100);
    s.add(1.0);
    s.add(-1e100);
    EXPECT_EQ(s.value(), 2.0);
}
