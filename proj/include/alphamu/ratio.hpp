#pragma once

// X = Υ1 / Υ2 for independent squared α-μ variates: PDF, CDF, MGF through the
// Fox H kernels H1, H2, H3, and the moments E[X^n].

#include <alphamu/dists.hpp>
#include <alphamu/error.hpp>
#include <alphamu/foxh.hpp>
#include <alphamu/special.hpp>

#include <cmath>
#include <string>

namespace alphamu {

enum class EvalPolicy { Contour, Series, Auto };

struct EvalOptions {
    EvalPolicy policy = EvalPolicy::Auto;
    QuadratureConfig quad{};
    SeriesConfig series{};
    /// Auto uses a series only this far inside its branch domain (relative in |z|).
    double auto_margin = 0.1;
    /// Auto drops a series result whose Σ|t| / |Σt| exceeds this.
    double max_condition = 1e4;
};

class RatioPair {
public:
    RatioPair(AlphaMuChannel num, AlphaMuChannel den, EvalOptions opts = {})
        : num_(num), den_(den), opts_(opts) {
        opts_.quad.validate();
        opts_.series.validate();
        detail::require(opts_.auto_margin >= 0.0 && opts_.auto_margin < 1.0, "RatioPair: auto_margin must lie in [0, 1)");
    }

    const AlphaMuChannel& num() const { return num_; }
    const AlphaMuChannel& den() const { return den_; }
    const EvalOptions& options() const { return opts_; }
    double k() const { return num_.alpha() / den_.alpha(); }

    RatioPair with_options(EvalOptions opts) const { return RatioPair(num_, den_, opts); }
    /// The pair for 1/X.
    RatioPair swapped() const { return RatioPair(den_, num_, opts_); }

private:
    AlphaMuChannel num_;
    AlphaMuChannel den_;
    EvalOptions opts_;
};

enum class RatioKernel { Pdf, Cdf, Mgf };

namespace detail {

inline FoxHParams kernel_params(RatioKernel kind, double mu1, double mu2, double k, double a) {
    switch (kind) {
        case RatioKernel::Pdf: return h1_params(mu1, mu2, k);
        case RatioKernel::Cdf: return h2_params(mu1, mu2, k);
        case RatioKernel::Mgf: return h3_params(mu1, mu2, k, a);
    }
    throw DomainError("kernel_params: unknown kernel");
}

inline SeriesResult kernel_series(RatioKernel kind, double mu1, double mu2, double k, double a, double log_z,
                                  const SeriesConfig& cfg) {
    switch (kind) {
        case RatioKernel::Pdf: return h1_series(mu1, mu2, k, log_z, cfg);
        case RatioKernel::Cdf: return h2_series(mu1, mu2, k, log_z, cfg);
        case RatioKernel::Mgf: return h3_series(mu1, mu2, k, a, log_z, cfg);
    }
    throw DomainError("kernel_series: unknown kernel");
}

// Whether (k, z) sits comfortably inside a series branch.
inline bool series_admissible(RatioKernel kind, double k, double a, double log_z, double margin) {
    const double delta = kind == RatioKernel::Mgf ? 1.0 - k - a : 1.0 - k;
    if (std::abs(delta) > 1e-12) return true;
    const double log_radius = kind == RatioKernel::Mgf ? -k * std::log(k) - a * std::log(a) : 0.0;
    return std::abs(log_z - log_radius) >= -std::log1p(-margin);
}

}  // namespace detail

/// Evaluates the H1 / H2 / H3 kernel of `pair` at log z under the pair's policy.
inline ScaledValue ratio_kernel(const RatioPair& pair, RatioKernel kind, double log_z) {
    const double mu1 = pair.num().mu();
    const double mu2 = pair.den().mu();
    const double k = pair.k();
    const double a = 0.5 * pair.num().alpha();
    const EvalOptions& opts = pair.options();
    auto contour = [&] { return foxh_contour_scaled(detail::kernel_params(kind, mu1, mu2, k, a), log_z, opts.quad); };

    switch (opts.policy) {
        case EvalPolicy::Contour: return contour();
        case EvalPolicy::Series: return detail::kernel_series(kind, mu1, mu2, k, a, log_z, opts.series).sum;
        case EvalPolicy::Auto: break;
    }
    if (!detail::series_admissible(kind, k, a, log_z, opts.auto_margin)) return contour();
    try {
        const SeriesResult r = detail::kernel_series(kind, mu1, mu2, k, a, log_z, opts.series);
        if (r.condition <= opts.max_condition && std::isfinite(r.sum.mantissa)) return r.sum;
    } catch (const SeriesDivergence&) {
    }
    return contour();
}

/// f_X(x) = α1 x^{α1μ1/2-1} (β2/β1)^{α1μ1/2} / (2 Γ(μ1) Γ(μ2)) · H1[(xβ2/β1)^{α1/2}]
inline double ratio_pdf(const RatioPair& pair, double x) {
    detail::require_positive(x, "ratio_pdf: x");
    const double a = 0.5 * pair.num().alpha();
    const double mu1 = pair.num().mu();
    const double log_y = std::log(x) + pair.den().log_beta() - pair.num().log_beta();
    const double log_z = a * log_y;
    // prefactor x^{aμ1-1} (β2/β1)^{aμ1} = y^{aμ1} / x
    const double log_pref = std::log(a) + mu1 * log_z - std::log(x) - log_gamma(mu1) - log_gamma(pair.den().mu());
    const double v = ratio_kernel(pair, RatioKernel::Pdf, log_z).times_exp(log_pref);
    return std::max(v, 0.0);
}

/// F_X(x) = z^{μ1} / (Γ(μ1) Γ(μ2)) · H2[z], z = (xβ2/β1)^{α1/2}
inline double ratio_cdf(const RatioPair& pair, double x) {
    if (!(x >= 0.0)) throw DomainError("ratio_cdf: x must be non-negative");
    if (x == 0.0) return 0.0;
    if (std::isinf(x)) return 1.0;
    const double a = 0.5 * pair.num().alpha();
    const double mu1 = pair.num().mu();
    const double log_z = a * (std::log(x) + pair.den().log_beta() - pair.num().log_beta());
    const double log_pref = mu1 * log_z - log_gamma(mu1) - log_gamma(pair.den().mu());
    const double v = ratio_kernel(pair, RatioKernel::Cdf, log_z).times_exp(log_pref);
    constexpr double slack = 1e-9;
    if (v < -slack || v > 1.0 + slack || !std::isfinite(v)) {
        throw NumericalError("ratio_cdf: value " + std::to_string(v) + " outside [0, 1]");
    }
    if (v > 1.0 - 1e-12) return 1.0;
    return std::max(v, 0.0);
}

/// M_X(s) = E[e^{-sX}] = (α1/2) Z^{μ1} / (Γ(μ1) Γ(μ2)) · H3[Z], Z = (β2/(sβ1))^{α1/2}
inline double ratio_mgf(const RatioPair& pair, double s) {
    detail::require_positive(s, "ratio_mgf: s");
    const double a = 0.5 * pair.num().alpha();
    const double mu1 = pair.num().mu();
    const double log_z = a * (pair.den().log_beta() - pair.num().log_beta() - std::log(s));
    const double log_pref = std::log(a) + mu1 * log_z - log_gamma(mu1) - log_gamma(pair.den().mu());
    return ratio_kernel(pair, RatioKernel::Mgf, log_z).times_exp(log_pref);
}

/// E[X^n] = (β1/β2)^n Γ(μ1 + 2n/α1) Γ(μ2 - 2n/α2) / (Γ(μ1) Γ(μ2)); needs 2n < μ2 α2.
inline double ratio_moment(const RatioPair& pair, double n) {
    if (!(n >= 0.0) || !std::isfinite(n)) throw DomainError("ratio_moment: order must be non-negative");
    const auto& c1 = pair.num();
    const auto& c2 = pair.den();
    if (!(2.0 * n < c2.mu() * c2.alpha())) {
        throw DivergenceError("ratio_moment: E[X^n] diverges for 2n >= mu2*alpha2");
    }
    if (n == 0.0) return 1.0;
    return std::exp(n * (c1.log_beta() - c2.log_beta()) + log_gamma(c1.mu() + 2.0 * n / c1.alpha()) +
                    log_gamma(c2.mu() - 2.0 * n / c2.alpha()) - log_gamma(c1.mu()) - log_gamma(c2.mu()));
}

// ---------------------------------------------------------------------------
// Classical special cases: Nakagami-m (α = 2, μ = m), Weibull (μ = 1),
// Rayleigh (α = 2, μ = 1).

enum class Marginal { Nakagami, Weibull, Rayleigh };

enum class SpecialCaseKind {
    NakagamiNakagami,
    NakagamiWeibull,
    NakagamiRayleigh,
    WeibullWeibull,
    WeibullNakagami,
    WeibullRayleigh,
    RayleighRayleigh,
    RayleighNakagami,
    RayleighWeibull,
};

inline Marginal numerator_marginal(SpecialCaseKind kind) {
    return static_cast<Marginal>(static_cast<int>(kind) / 3);
}

inline Marginal denominator_marginal(SpecialCaseKind kind) {
    static constexpr Marginal order[3][3] = {
        {Marginal::Nakagami, Marginal::Weibull, Marginal::Rayleigh},
        {Marginal::Weibull, Marginal::Nakagami, Marginal::Rayleigh},
        {Marginal::Rayleigh, Marginal::Nakagami, Marginal::Weibull},
    };
    const int i = static_cast<int>(kind);
    return order[i / 3][i % 3];
}

inline const char* to_string(SpecialCaseKind kind) {
    static constexpr const char* names[] = {
        "nakagami/nakagami", "nakagami/weibull", "nakagami/rayleigh", "weibull/weibull",   "weibull/nakagami",
        "weibull/rayleigh",  "rayleigh/rayleigh", "rayleigh/nakagami", "rayleigh/weibull",
    };
    return names[static_cast<int>(kind)];
}

/// Channel for a classical marginal. `shape` is m for Nakagami, α for Weibull,
/// ignored for Rayleigh.
inline AlphaMuChannel special_marginal(Marginal m, double shape, double mean_snr) {
    switch (m) {
        case Marginal::Nakagami: return AlphaMuChannel::from_mean_snr(2.0, shape, mean_snr);
        case Marginal::Weibull: return AlphaMuChannel::from_mean_snr(shape, 1.0, mean_snr);
        case Marginal::Rayleigh: return AlphaMuChannel::from_mean_snr(2.0, 1.0, mean_snr);
    }
    throw DomainError("special_marginal: unknown marginal");
}

inline RatioPair make_special_case(SpecialCaseKind kind, double shape1, double shape2, double snr1, double snr2,
                                   EvalOptions opts = {}) {
    return RatioPair(special_marginal(numerator_marginal(kind), shape1, snr1),
                     special_marginal(denominator_marginal(kind), shape2, snr2), opts);
}

namespace detail {

// One tabulated closed form: log prefactor, kernel, and the power of the
// scaled argument fed to the kernel.
struct TableEntry {
    double log_prefactor;
    FoxHParams kernel;
    double log_arg;
};

inline void check_special_case(SpecialCaseKind kind, const RatioPair& pair) {
    auto fits = [](Marginal m, const AlphaMuChannel& c) {
        switch (m) {
            case Marginal::Nakagami: return c.alpha() == 2.0;
            case Marginal::Weibull: return c.mu() == 1.0;
            case Marginal::Rayleigh: return c.alpha() == 2.0 && c.mu() == 1.0;
        }
        return false;
    };
    if (!fits(numerator_marginal(kind), pair.num()) || !fits(denominator_marginal(kind), pair.den())) {
        throw DomainError(std::string("special case ") + to_string(kind) + ": channel parameters do not match");
    }
}

// log(β2/β1) + log(x) for the PDF/CDF rows, log(β2/(sβ1)) for the MGF rows.
inline TableEntry table_entry(SpecialCaseKind kind, RatioKernel stat, const RatioPair& pair, double log_y) {
    check_special_case(kind, pair);
    const double a1 = pair.num().alpha();
    const double a2 = pair.den().alpha();
    const double m1 = pair.num().mu();
    const double m2 = pair.den().mu();
    const double h = 0.5 * a1;
    const double k = a1 / a2;
    const double w = 2.0 / a2;
    const double lg1 = log_gamma(m1);
    const double lg2 = log_gamma(m2);
    using K = SpecialCaseKind;

    if (stat == RatioKernel::Pdf) {
        // log_y = log(xβ2/β1); the rows carry x^{-1} via y^{...}/x
        switch (kind) {
            case K::NakagamiNakagami: return {m1 * log_y - lg1 - lg2, meijer_g_params(1, 1, {1.0 - m2 - m1}, {0.0}), log_y};
            case K::NakagamiWeibull: return {m1 * log_y - lg1, FoxHParams(1, 1, {{-w * m1, w}}, {{0.0, 1.0}}), log_y};
            case K::NakagamiRayleigh: return {m1 * log_y - lg1, meijer_g_params(1, 1, {-m1}, {0.0}), log_y};
            case K::WeibullWeibull:
                return {std::log(h) + h * log_y, FoxHParams(1, 1, {{-k, k}}, {{0.0, 1.0}}), h * log_y};
            case K::WeibullNakagami:
                return {std::log(h) + h * log_y - lg2, FoxHParams(1, 1, {{1.0 - m2 - h, h}}, {{0.0, 1.0}}), h * log_y};
            case K::WeibullRayleigh:
                return {std::log(h) + h * log_y, FoxHParams(1, 1, {{-h, h}}, {{0.0, 1.0}}), h * log_y};
            case K::RayleighRayleigh: return {log_y, meijer_g_params(1, 1, {-1.0}, {0.0}), log_y};
            case K::RayleighNakagami: return {log_y - lg2, meijer_g_params(1, 1, {-m2}, {0.0}), log_y};
            case K::RayleighWeibull: return {log_y, FoxHParams(1, 1, {{-w, w}}, {{0.0, 1.0}}), log_y};
        }
    }
    if (stat == RatioKernel::Cdf) {
        switch (kind) {
            case K::NakagamiNakagami:
                return {m1 * log_y - lg1 - lg2, meijer_g_params(1, 2, {1.0 - m1, 1.0 - m1 - m2}, {0.0, -m1}), log_y};
            case K::NakagamiWeibull:
                return {m1 * log_y - lg1, FoxHParams(1, 2, {{1.0 - m1, 1.0}, {-w * m1, w}}, {{0.0, 1.0}, {-m1, 1.0}}), log_y};
            case K::NakagamiRayleigh:
                return {m1 * log_y - lg1, meijer_g_params(1, 2, {1.0 - m1, -m1}, {0.0, -m1}), log_y};
            case K::WeibullWeibull:
                return {h * log_y, FoxHParams(1, 2, {{0.0, 1.0}, {-k, k}}, {{0.0, 1.0}, {-1.0, 1.0}}), h * log_y};
            case K::WeibullNakagami:
                return {h * log_y - lg2, FoxHParams(1, 2, {{0.0, 1.0}, {1.0 - h - m2, h}}, {{0.0, 1.0}, {-1.0, 1.0}}),
                        h * log_y};
            case K::WeibullRayleigh:
                return {h * log_y, FoxHParams(1, 2, {{0.0, 1.0}, {-h, h}}, {{0.0, 1.0}, {-1.0, 1.0}}), h * log_y};
            case K::RayleighRayleigh: return {log_y, meijer_g_params(1, 2, {0.0, -1.0}, {0.0, -1.0}), log_y};
            case K::RayleighNakagami: return {log_y - lg2, meijer_g_params(1, 2, {0.0, -m2}, {0.0, -1.0}), log_y};
            case K::RayleighWeibull:
                return {log_y, FoxHParams(1, 2, {{0.0, 1.0}, {-w, w}}, {{0.0, 1.0}, {-1.0, 1.0}}), log_y};
        }
    }
    // MGF rows; log_y = log(β2/(sβ1))
    switch (kind) {
        case K::NakagamiNakagami:
            return {m1 * log_y - lg1 - lg2, meijer_g_params(1, 2, {1.0 - m2 - m1, 1.0 - m1}, {0.0}), log_y};
        case K::NakagamiWeibull:
            return {m1 * log_y - lg1, FoxHParams(1, 2, {{-w * m1, w}, {1.0 - m1, 1.0}}, {{0.0, 1.0}}), log_y};
        case K::NakagamiRayleigh: return {m1 * log_y - lg1, meijer_g_params(1, 2, {-m1, 1.0 - m1}, {0.0}), log_y};
        case K::WeibullWeibull:
            return {std::log(h) + h * log_y, FoxHParams(1, 2, {{-k, k}, {1.0 - h, h}}, {{0.0, 1.0}}), h * log_y};
        case K::WeibullNakagami:
            return {std::log(h) + h * log_y - lg2, FoxHParams(1, 2, {{1.0 - m2 - h, h}, {1.0 - h, h}}, {{0.0, 1.0}}),
                    h * log_y};
        case K::WeibullRayleigh:
            return {std::log(h) + h * log_y, FoxHParams(1, 2, {{-h, h}, {1.0 - h, h}}, {{0.0, 1.0}}), h * log_y};
        case K::RayleighRayleigh: return {log_y, meijer_g_params(1, 2, {-1.0, 0.0}, {0.0}), log_y};
        case K::RayleighNakagami: return {log_y - lg2, meijer_g_params(1, 2, {-m2, 0.0}, {0.0}), log_y};
        case K::RayleighWeibull: return {log_y, FoxHParams(1, 2, {{-w, w}, {0.0, 1.0}}, {{0.0, 1.0}}), log_y};
    }
    throw DomainError("table_entry: unknown special case");
}

inline double eval_table(const TableEntry& e, const QuadratureConfig& quad) {
    return foxh_contour_scaled(e.kernel, e.log_arg, quad).times_exp(e.log_prefactor);
}

}  // namespace detail

/// Tabulated closed-form PDF of a classical ratio (Meijer G / Fox H form).
inline double special_case_pdf(SpecialCaseKind kind, const RatioPair& pair, double x) {
    detail::require_positive(x, "special_case_pdf: x");
    const double log_y = std::log(x) + pair.den().log_beta() - pair.num().log_beta();
    return detail::eval_table(detail::table_entry(kind, RatioKernel::Pdf, pair, log_y), pair.options().quad) / x;
}

inline double special_case_cdf(SpecialCaseKind kind, const RatioPair& pair, double x) {
    detail::require_positive(x, "special_case_cdf: x");
    const double log_y = std::log(x) + pair.den().log_beta() - pair.num().log_beta();
    return detail::eval_table(detail::table_entry(kind, RatioKernel::Cdf, pair, log_y), pair.options().quad);
}

inline double special_case_mgf(SpecialCaseKind kind, const RatioPair& pair, double s) {
    detail::require_positive(s, "special_case_mgf: s");
    const double log_y = pair.den().log_beta() - pair.num().log_beta() - std::log(s);
    return detail::eval_table(detail::table_entry(kind, RatioKernel::Mgf, pair, log_y), pair.options().quad);
}

}  // namespace alphamu
