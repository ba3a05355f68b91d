#pragma once

// Link-level applications of the ratio statistics: secrecy outage lower bound,
// underlay cognitive DF relaying outage, full-duplex DF relaying outage.

#include <alphamu/dists.hpp>
#include <alphamu/error.hpp>
#include <alphamu/ratio.hpp>

#include <cmath>

namespace alphamu {

/// Wiretap link: Alice→Bob (main) and Alice→Eve. Secrecy outage is
/// Pr{(1+γB)/(1+γE) < 2^R}, bounded below by Pr{γB/γE < τ1}, τ1 = 2^R.
struct SecrecyScenario {
    AlphaMuChannel main;
    AlphaMuChannel eve;
    double rate_threshold = 0.0;

    static SecrecyScenario with_threshold(AlphaMuChannel main, AlphaMuChannel eve, double tau1) {
        detail::require(tau1 >= 1.0, "SecrecyScenario: tau1 must be >= 1");
        return {main, eve, std::log2(tau1)};
    }

    double tau1() const { return std::exp2(rate_threshold); }

    void validate() const { detail::require(rate_threshold >= 0.0, "SecrecyScenario: rate threshold must be >= 0"); }
};

inline double sop_lower_bound(const SecrecyScenario& sc, const EvalOptions& opts = {}) {
    sc.validate();
    return ratio_cdf(RatioPair(sc.main, sc.eve, opts), sc.tau1());
}

/// Underlay cognitive two-hop DF network. Link channels describe the power
/// gains g_ij (their mean SNR is the mean gain); the secondary nodes transmit
/// at I/g_SP and I/g_RP, so γ_SR = g_SR Ῡ_I / g_SP and γ_RD = g_RD Ῡ_I / g_RP.
struct CognitiveScenario {
    AlphaMuChannel sr;
    AlphaMuChannel sp;
    AlphaMuChannel rd;
    AlphaMuChannel rp;
    double interference_snr = 1.0;  // Ῡ_I, linear
    double rate = 0.5;              // 𝓡, so τ2 = 2^{2𝓡} - 1

    static CognitiveScenario with_threshold(AlphaMuChannel sr, AlphaMuChannel sp, AlphaMuChannel rd, AlphaMuChannel rp,
                                            double interference_snr, double tau2) {
        detail::require_positive(tau2, "CognitiveScenario: tau2");
        return {sr, sp, rd, rp, interference_snr, 0.5 * std::log2(1.0 + tau2)};
    }

    double tau2() const { return std::exp2(2.0 * rate) - 1.0; }

    RatioPair first_hop(const EvalOptions& opts = {}) const { return RatioPair(sr.scaled(interference_snr), sp, opts); }
    RatioPair second_hop(const EvalOptions& opts = {}) const { return RatioPair(rd.scaled(interference_snr), rp, opts); }

    void validate() const {
        detail::require_positive(interference_snr, "CognitiveScenario: interference_snr");
        detail::require_positive(rate, "CognitiveScenario: rate");
    }
};

/// P_out = F2 + F3 - F2 F3 at τ2.
inline double cognitive_outage(const CognitiveScenario& sc, const EvalOptions& opts = {}) {
    sc.validate();
    const double t = sc.tau2();
    const double f2 = ratio_cdf(sc.first_hop(opts), t);
    const double f3 = ratio_cdf(sc.second_hop(opts), t);
    return f2 + f3 - f2 * f3;
}

/// Two-hop full-duplex DF relay with residual self-interference on the RR
/// loop. Channels describe the power gains |h|²; every received SNR is
/// |h|² γ_P / 2.
struct FullDuplexScenario {
    AlphaMuChannel sr;
    AlphaMuChannel rd;
    AlphaMuChannel rr;
    double system_snr = 1.0;  // γ_P, linear
    double rate = 1.0;        // 𝓡, so τ3 = 2^𝓡 - 1

    static FullDuplexScenario with_threshold(AlphaMuChannel sr, AlphaMuChannel rd, AlphaMuChannel rr,
                                             double system_snr, double tau3) {
        detail::require_positive(tau3, "FullDuplexScenario: tau3");
        return {sr, rd, rr, system_snr, std::log2(1.0 + tau3)};
    }

    /// Rayleigh loop-back channel with mean gain `mean_gain`.
    static AlphaMuChannel rayleigh_rr(double mean_gain) { return AlphaMuChannel::from_mean_snr(2.0, 1.0, mean_gain); }

    double tau3() const { return std::exp2(rate) - 1.0; }
    double hop_scale() const { return 0.5 * system_snr; }

    AlphaMuChannel sr_snr() const { return sr.scaled(hop_scale()); }
    AlphaMuChannel rd_snr() const { return rd.scaled(hop_scale()); }
    AlphaMuChannel rr_snr() const { return rr.scaled(hop_scale()); }

    /// X4 = γ_SR / γ_RR; the γ_P/2 factors cancel.
    RatioPair sir_pair(const EvalOptions& opts = {}) const { return RatioPair(sr, rr, opts); }

    void validate() const {
        detail::require_positive(system_snr, "FullDuplexScenario: system_snr");
        detail::require_positive(rate, "FullDuplexScenario: rate");
    }
};

/// F4(τ3), the high-SNR floor of the interference-limited outage.
inline double fullduplex_floor(const FullDuplexScenario& sc, const EvalOptions& opts = {}) {
    sc.validate();
    return ratio_cdf(sc.sir_pair(opts), sc.tau3());
}

/// Interference-limited outage F4 + F5 - F4 F5 at τ3 (γ_RR + 1 ≈ γ_RR).
inline double fullduplex_outage(const FullDuplexScenario& sc, const EvalOptions& opts = {}) {
    const double f4 = fullduplex_floor(sc, opts);
    const double f5 = snr_cdf(sc.rd_snr(), sc.tau3());
    return f4 + f5 - f4 * f5;
}

}  // namespace alphamu
