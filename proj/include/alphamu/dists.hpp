#pragma once

// α-μ fading: envelope R and SNR Υ = γ_t R² laws, their moments, and sampling.

#include <alphamu/error.hpp>
#include <alphamu/rng.hpp>
#include <alphamu/special.hpp>

#include <cmath>
#include <cstdint>
#include <vector>

namespace alphamu {

/// α-μ channel. Built either from the envelope scale (r̂, γ_t) or from the
/// mean SNR Ῡ; the two descriptions are tied by Ῡ = r̂² γ_t Γ(μ+2/α) / (μ^{2/α} Γ(μ)).
class AlphaMuChannel {
public:
    static AlphaMuChannel from_envelope(double alpha, double mu, double r_hat, double gamma_t) {
        detail::require_positive(alpha, "AlphaMuChannel: alpha");
        detail::require_positive(mu, "AlphaMuChannel: mu");
        detail::require_positive(r_hat, "AlphaMuChannel: r_hat");
        detail::require_positive(gamma_t, "AlphaMuChannel: gamma_t");
        // β = γ_t r̂² / μ^{2/α}
        const double log_beta = std::log(gamma_t) + 2.0 * std::log(r_hat) - (2.0 / alpha) * std::log(mu);
        return AlphaMuChannel(alpha, mu, r_hat, gamma_t, log_beta);
    }

    /// Unit r̂; γ_t chosen so the mean SNR is `mean_snr` (linear).
    static AlphaMuChannel from_mean_snr(double alpha, double mu, double mean_snr) {
        detail::require_positive(alpha, "AlphaMuChannel: alpha");
        detail::require_positive(mu, "AlphaMuChannel: mu");
        detail::require_positive(mean_snr, "AlphaMuChannel: mean_snr");
        const double log_beta = std::log(mean_snr) + log_gamma(mu) - log_gamma(mu + 2.0 / alpha);
        const double gamma_t = std::exp(log_beta + (2.0 / alpha) * std::log(mu));
        return AlphaMuChannel(alpha, mu, 1.0, gamma_t, log_beta);
    }

    double alpha() const { return alpha_; }
    double mu() const { return mu_; }
    double r_hat() const { return r_hat_; }
    double gamma_t() const { return gamma_t_; }
    double beta() const { return std::exp(log_beta_); }
    double log_beta() const { return log_beta_; }
    double mean_snr() const { return std::exp(log_mean_snr()); }
    double log_mean_snr() const { return log_beta_ + log_gamma(mu_ + 2.0 / alpha_) - log_gamma(mu_); }

    /// Same fading, mean SNR multiplied by `factor` (γ_t scaled).
    AlphaMuChannel scaled(double factor) const {
        detail::require_positive(factor, "AlphaMuChannel::scaled: factor");
        return AlphaMuChannel(alpha_, mu_, r_hat_, gamma_t_ * factor, log_beta_ + std::log(factor));
    }

private:
    AlphaMuChannel(double alpha, double mu, double r_hat, double gamma_t, double log_beta)
        : alpha_(alpha), mu_(mu), r_hat_(r_hat), gamma_t_(gamma_t), log_beta_(log_beta) {}

    double alpha_;
    double mu_;
    double r_hat_;
    double gamma_t_;
    double log_beta_;
};

inline double envelope_pdf(const AlphaMuChannel& ch, double r) {
    detail::require_positive(r, "envelope_pdf: r");
    const double a = ch.alpha();
    const double mu = ch.mu();
    const double u = std::log(r / ch.r_hat());
    const double log_pdf = std::log(a) + mu * std::log(mu) + (a * mu - 1.0) * std::log(r) - a * mu * std::log(ch.r_hat()) -
                           log_gamma(mu) - mu * std::exp(a * u);
    return std::exp(log_pdf);
}

/// E[R^n] = r̂^n Γ(μ + n/α) / (μ^{n/α} Γ(μ)); finite for n > -αμ.
inline double envelope_moment(const AlphaMuChannel& ch, double n) {
    const double arg = ch.mu() + n / ch.alpha();
    if (!(arg > 0.0)) throw DivergenceError("envelope_moment: E[R^n] diverges for mu + n/alpha <= 0");
    return std::exp(n * std::log(ch.r_hat()) + log_gamma(arg) - (n / ch.alpha()) * std::log(ch.mu()) - log_gamma(ch.mu()));
}

/// E[R^{-n}] = r̂^{-n} μ^{n/α} Γ(μ - n/α) / Γ(μ); finite for n < αμ.
inline double inverse_envelope_moment(const AlphaMuChannel& ch, double n) {
    const double arg = ch.mu() - n / ch.alpha();
    if (!(arg > 0.0)) throw DivergenceError("inverse_envelope_moment: E[R^-n] diverges for n >= alpha*mu");
    return std::exp(-n * std::log(ch.r_hat()) + (n / ch.alpha()) * std::log(ch.mu()) + log_gamma(arg) - log_gamma(ch.mu()));
}

inline double snr_pdf(const AlphaMuChannel& ch, double snr) {
    detail::require_positive(snr, "snr_pdf: snr");
    const double h = 0.5 * ch.alpha();
    const double log_ratio = std::log(snr) - ch.log_beta();
    const double log_pdf = std::log(h) + (h * ch.mu() - 1.0) * std::log(snr) - h * ch.mu() * ch.log_beta() -
                           log_gamma(ch.mu()) - std::exp(h * log_ratio);
    return std::exp(log_pdf);
}

/// F_Υ(γ) = P(μ, (γ/β)^{α/2}).
inline double snr_cdf(const AlphaMuChannel& ch, double snr) {
    if (!(snr >= 0.0)) throw DomainError("snr_cdf: snr must be non-negative");
    if (snr == 0.0) return 0.0;
    const double y = std::exp(0.5 * ch.alpha() * (std::log(snr) - ch.log_beta()));
    return regularized_lower_gamma(ch.mu(), y);
}

/// E[Υ^n] = β^n Γ(μ + 2n/α)/Γ(μ) for real n with μ + 2n/α > 0.
inline double snr_moment(const AlphaMuChannel& ch, double n) {
    const double arg = ch.mu() + 2.0 * n / ch.alpha();
    if (!(arg > 0.0)) throw DivergenceError("snr_moment: E[snr^n] diverges for mu + 2n/alpha <= 0");
    return std::exp(n * ch.log_beta() + log_gamma(arg) - log_gamma(ch.mu()));
}

/// Identifies one reproducible substream of random numbers.
struct SampleStream {
    std::uint64_t seed = 0;
    std::uint64_t count = 0;
    std::uint64_t stream_id = 0;
};

/// Draws envelope / SNR variates through R = r̂ (G/μ)^{1/α}, G ~ Gamma(μ, 1).
class AlphaMuSampler {
public:
    explicit AlphaMuSampler(const AlphaMuChannel& ch)
        : mu_(ch.mu()), inv_alpha_(1.0 / ch.alpha()), r_hat_(ch.r_hat()), beta_(ch.beta()) {}

    double envelope(Xoshiro256& rng) const { return r_hat_ * std::pow(rng.gamma(mu_) / mu_, inv_alpha_); }
    /// Υ = β G^{2/α}
    double snr(Xoshiro256& rng) const { return beta_ * std::pow(rng.gamma(mu_), 2.0 * inv_alpha_); }

private:
    double mu_;
    double inv_alpha_;
    double r_hat_;
    double beta_;
};

inline std::vector<double> sample_envelope(const AlphaMuChannel& ch, const SampleStream& stream) {
    detail::require(stream.count > 0, "sample_envelope: count must be positive");
    Xoshiro256 rng(stream.seed, stream.stream_id);
    const AlphaMuSampler sampler(ch);
    std::vector<double> out(stream.count);
    for (auto& v : out) v = sampler.envelope(rng);
    return out;
}

inline std::vector<double> sample_snr(const AlphaMuChannel& ch, const SampleStream& stream) {
    detail::require(stream.count > 0, "sample_snr: count must be positive");
    Xoshiro256 rng(stream.seed, stream.stream_id);
    const AlphaMuSampler sampler(ch);
    std::vector<double> out(stream.count);
    for (auto& v : out) v = sampler.snr(rng);
    return out;
}

}  // namespace alphamu
