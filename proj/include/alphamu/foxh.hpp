#pragma once

// Univariate Fox H-function
//
//   H^{m,n}_{p,q}[z] = (1 / 2πi) ∫_C Θ(s) z^{-s} ds
//
//   Θ(s) = Π_{j<m} Γ(b_j + B_j s) Π_{j<n} Γ(1 - a_j - A_j s)
//          / ( Π_{j>=m} Γ(1 - b_j - B_j s) Π_{j>=n} Γ(a_j + A_j s) )
//
// evaluated by Gauss-Legendre quadrature along a vertical line Re s = c that
// separates the left poles (of Γ(b_j + B_j s)) from the right poles (of
// Γ(1 - a_j - A_j s)), and, for the three kernels of the α-μ ratio
// statistics, by their residue series.

#include <alphamu/detail/gauss_legendre.hpp>
#include <alphamu/error.hpp>
#include <alphamu/special.hpp>

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace alphamu {

/// One gamma argument (shift, weight): (a_j, A_j) or (b_j, B_j).
struct GammaArg {
    double shift;
    double weight;
};

/// Orders and coefficient lists of a Fox H instance.
class FoxHParams {
public:
    FoxHParams(int m, int n, std::vector<GammaArg> upper, std::vector<GammaArg> lower)
        : m_(m), n_(n), upper_(std::move(upper)), lower_(std::move(lower)) {
        const int p = static_cast<int>(upper_.size());
        const int q = static_cast<int>(lower_.size());
        detail::require(0 <= n_ && n_ <= p, "FoxHParams: need 0 <= n <= p");
        detail::require(1 <= m_ && m_ <= q, "FoxHParams: need 1 <= m <= q");
        for (const auto& g : upper_) detail::require(g.weight > 0.0 && std::isfinite(g.shift), "FoxHParams: A_j must be positive");
        for (const auto& g : lower_) detail::require(g.weight > 0.0 && std::isfinite(g.shift), "FoxHParams: B_j must be positive");
        if (!(left_pole_bound() < right_pole_bound())) {
            throw InfeasibleContour("FoxHParams: no vertical contour separates the pole families (L = " +
                                    std::to_string(left_pole_bound()) + ", R = " + std::to_string(right_pole_bound()) + ")");
        }
    }

    int m() const { return m_; }
    int n() const { return n_; }
    int p() const { return static_cast<int>(upper_.size()); }
    int q() const { return static_cast<int>(lower_.size()); }
    std::span<const GammaArg> upper() const { return upper_; }
    std::span<const GammaArg> lower() const { return lower_; }

    /// Rightmost left pole: max_{j<m} -b_j / B_j.
    double left_pole_bound() const {
        double v = -std::numeric_limits<double>::infinity();
        for (int j = 0; j < m_; ++j) v = std::max(v, -lower_[j].shift / lower_[j].weight);
        return v;
    }

    /// Leftmost right pole: min_{j<n} (1 - a_j) / A_j, +inf when n = 0.
    double right_pole_bound() const {
        double v = std::numeric_limits<double>::infinity();
        for (int j = 0; j < n_; ++j) v = std::min(v, (1.0 - upper_[j].shift) / upper_[j].weight);
        return v;
    }

    bool all_unit_weights() const {
        auto unit = [](const GammaArg& g) { return g.weight == 1.0; };
        return std::all_of(upper_.begin(), upper_.end(), unit) && std::all_of(lower_.begin(), lower_.end(), unit);
    }

private:
    int m_;
    int n_;
    std::vector<GammaArg> upper_;
    std::vector<GammaArg> lower_;
};

/// Meijer G parameters: every weight equal to one.
inline FoxHParams meijer_g_params(int m, int n, const std::vector<double>& a, const std::vector<double>& b) {
    std::vector<GammaArg> upper;
    std::vector<GammaArg> lower;
    for (double v : a) upper.push_back({v, 1.0});
    for (double v : b) lower.push_back({v, 1.0});
    return FoxHParams(m, n, std::move(upper), std::move(lower));
}

struct QuadratureConfig {
    double rel_tol = 1e-10;
    double abs_tol = 1e-14;
    double initial_half_length = 20.0;
    double max_half_length = 2000.0;
    int panel_order = 64;
    std::optional<double> contour_offset_override;
    /// Move c to the minimum of |Θ(c) z^{-c}| inside the strip.
    bool saddle_refine = true;
    /// Integrate t < 0 as well and check the imaginary part vanishes.
    bool check_conjugate_symmetry = false;

    void validate() const {
        detail::require(rel_tol > 0.0 && rel_tol < 1.0, "QuadratureConfig: rel_tol must lie in (0, 1)");
        detail::require(abs_tol > 0.0, "QuadratureConfig: abs_tol must be positive");
        detail::require(initial_half_length > 0.0 && initial_half_length < max_half_length,
                        "QuadratureConfig: need 0 < initial_half_length < max_half_length");
        detail::require(panel_order > 0, "QuadratureConfig: panel_order must be positive");
    }
};

struct SeriesConfig {
    double rel_tol = 1e-12;
    int consecutive_small_terms = 3;
    int max_terms = 500;
    /// Results with Σ|t| / |Σt| above this are refused: about log10 of it digits are gone.
    double max_condition = 1e8;

    void validate() const {
        detail::require(rel_tol > 0.0 && rel_tol < 1.0, "SeriesConfig: rel_tol must lie in (0, 1)");
        detail::require(consecutive_small_terms > 0, "SeriesConfig: consecutive_small_terms must be positive");
        detail::require(max_terms >= consecutive_small_terms, "SeriesConfig: max_terms < consecutive_small_terms");
        detail::require(max_condition >= 1.0, "SeriesConfig: max_condition must be >= 1");
    }
};

/// mantissa * exp(log_scale); keeps results representable when the
/// prefactor and the kernel overflow or underflow individually.
struct ScaledValue {
    double mantissa = 0.0;
    double log_scale = 0.0;

    double value() const {
        if (mantissa == 0.0) return 0.0;
        return std::copysign(std::exp(std::log(std::abs(mantissa)) + log_scale), mantissa);
    }
    /// value() * exp(extra_log)
    double times_exp(double extra_log) const {
        if (mantissa == 0.0) return 0.0;
        return std::copysign(std::exp(std::log(std::abs(mantissa)) + log_scale + extra_log), mantissa);
    }
};

/// log Θ(s). A vanishing reciprocal gamma gives real part -inf.
inline complex log_theta(const FoxHParams& params, complex s) {
    complex acc = 0.0;
    const auto upper = params.upper();
    const auto lower = params.lower();
    try {
        for (int j = 0; j < params.m(); ++j) acc += log_gamma(lower[j].shift + lower[j].weight * s);
        for (int j = 0; j < params.n(); ++j) acc += log_gamma(1.0 - upper[j].shift - upper[j].weight * s);
    } catch (const PoleError&) {
        throw PoleError("theta: s = (" + std::to_string(s.real()) + ", " + std::to_string(s.imag()) +
                        ") is a pole of a numerator gamma");
    }
    auto reciprocal = [&](complex arg) {
        if (arg.imag() == 0.0 && detail::is_nonpositive_integer(arg.real())) {
            acc = complex(-std::numeric_limits<double>::infinity(), 0.0);
            return false;
        }
        acc -= log_gamma(arg);
        return true;
    };
    for (int j = params.m(); j < params.q(); ++j) {
        if (!reciprocal(1.0 - lower[j].shift - lower[j].weight * s)) return acc;
    }
    for (int j = params.n(); j < params.p(); ++j) {
        if (!reciprocal(upper[j].shift + upper[j].weight * s)) return acc;
    }
    return acc;
}

/// Θ(s), exponentiated once from log space. Empty products are one.
inline complex theta(const FoxHParams& params, complex s) {
    const complex l = log_theta(params, s);
    if (std::isinf(l.real()) && l.real() < 0.0) return 0.0;
    return std::exp(l);
}

/// Contour abscissa: midpoint of (L, R), or L + 1 when R is unbounded.
inline double choose_contour_offset(const FoxHParams& params, const QuadratureConfig& cfg = {}) {
    const double lo = params.left_pole_bound();
    const double hi = params.right_pole_bound();
    if (!(lo < hi)) throw InfeasibleContour("choose_contour_offset: L >= R");
    if (cfg.contour_offset_override) {
        const double c = *cfg.contour_offset_override;
        if (!(lo < c && c < hi)) {
            throw InfeasibleContour("choose_contour_offset: override " + std::to_string(c) + " outside (L, R)");
        }
        return c;
    }
    return std::isinf(hi) ? lo + 1.0 : 0.5 * (lo + hi);
}

namespace detail {

// Re log Θ(c) - c log z on the real axis.
inline double contour_exponent(const FoxHParams& params, double c, double log_z) {
    return log_theta(params, complex(c, 0.0)).real() - c * log_z;
}

inline double golden_minimize(const auto& f, double lo, double hi, int iters) {
    constexpr double r = 0.6180339887498949;
    double x1 = hi - r * (hi - lo);
    double x2 = lo + r * (hi - lo);
    double f1 = f(x1);
    double f2 = f(x2);
    for (int i = 0; i < iters; ++i) {
        if (f1 < f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - r * (hi - lo);
            f1 = f(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + r * (hi - lo);
            f2 = f(x2);
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace detail

/// Abscissa minimizing |Θ(c) z^{-c}| over the strip, kept a little away
/// from both pole families. Along the vertical line through this real saddle
/// the integrand has no large cancelling oscillation.
inline double saddle_contour_offset(const FoxHParams& params, double log_z) {
    const double lo_pole = params.left_pole_bound();
    const double hi_pole = params.right_pole_bound();
    const double width = hi_pole - lo_pole;
    const double margin = std::isinf(width) ? 0.05 : std::min(0.05, 0.25 * width);
    const double lo = lo_pole + margin;
    double hi = hi_pole - margin;
    auto phi = [&](double c) {
        const double v = detail::contour_exponent(params, c, log_z);
        return std::isfinite(v) ? v : std::numeric_limits<double>::infinity();
    };

    if (std::isinf(hi)) {
        double c = lo_pole + 1.0;
        double step = 1.0;
        double fc = phi(c);
        while (c < lo_pole + 1e6) {
            const double fn = phi(c + step);
            if (!(fn < fc)) break;
            c += step;
            fc = fn;
            step *= 2.0;
        }
        hi = c + step;
    }

    constexpr int scan = 24;
    int best = 0;
    double best_val = std::numeric_limits<double>::infinity();
    for (int i = 0; i <= scan; ++i) {
        const double c = lo + (hi - lo) * i / scan;
        const double v = phi(c);
        if (v < best_val) {
            best_val = v;
            best = i;
        }
    }
    const double a = lo + (hi - lo) * std::max(0, best - 1) / scan;
    const double b = lo + (hi - lo) * std::min(scan, best + 1) / scan;
    return detail::golden_minimize(phi, a, b, 48);
}

/// Mellin-Barnes integral with log z given; the result is returned scaled.
inline ScaledValue foxh_contour_scaled(const FoxHParams& params, double log_z, const QuadratureConfig& cfg = {}) {
    cfg.validate();
    detail::require(std::isfinite(log_z), "foxh_contour: z must be positive and finite");

    double c = choose_contour_offset(params, cfg);
    if (!cfg.contour_offset_override && cfg.saddle_refine) c = saddle_contour_offset(params, log_z);

    const double phi0 = detail::contour_exponent(params, c, log_z);
    if (!std::isfinite(phi0)) throw NumericalError("foxh_contour: integrand not finite on the real axis");

    auto integrand = [&](double t) -> complex {
        const complex s(c, t);
        const complex l = log_theta(params, s) - s * log_z - phi0;
        if (std::isinf(l.real())) return 0.0;
        return std::exp(l);
    };

    const auto& rule = detail::gauss_legendre(cfg.panel_order);
    const double pole_gap = std::min(c - params.left_pole_bound(), params.right_pole_bound() - c);
    const double base_width = std::min(1.0, 4.0 / std::max(1.0, std::abs(log_z)));

    // Integrates sign * t over [0, T] on graded panels; returns (Re-sum, Im-sum, L1).
    struct Walker {
        double t = 0.0;
        double width;
        double base;
    };
    auto run_side = [&](double sign) -> std::pair<complex, bool> {
        Walker w{0.0, std::min(base_width, pole_gap), base_width};
        CompensatedSum re;
        CompensatedSum im;
        double T = cfg.initial_half_length;
        bool first = true;
        while (true) {
            double seg_l1 = 0.0;
            while (w.t < T) {
                const double half = 0.5 * w.width;
                const double mid = w.t + half;
                for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
                    const complex f = integrand(sign * (mid + half * rule.nodes[i]));
                    const double wt = half * rule.weights[i];
                    re.add(wt * f.real());
                    im.add(wt * f.imag());
                    seg_l1 += wt * std::abs(f);
                }
                w.t += w.width;
                w.width = std::min(w.base, 2.0 * w.width);
            }
            if (!first) {
                const double tol = std::max(cfg.rel_tol * std::abs(re.value()), cfg.abs_tol);
                if (seg_l1 <= tol) return {complex(re.value(), im.value()), true};
            }
            first = false;
            if (T >= cfg.max_half_length) return {complex(re.value(), im.value()), false};
            T = std::min(2.0 * T, cfg.max_half_length);
        }
    };

    const auto [upper, ok] = run_side(1.0);
    if (!ok) {
        throw NumericalError("foxh_contour: truncation did not converge before max_half_length = " +
                             std::to_string(cfg.max_half_length));
    }
    double integral = upper.real() / std::numbers::pi;
    if (cfg.check_conjugate_symmetry) {
        const auto [lower, ok_lower] = run_side(-1.0);
        if (!ok_lower) throw NumericalError("foxh_contour: lower half did not converge");
        // ∫_{-T}^{T} f dt / 2π; the imaginary part must cancel between halves.
        const double imag = (upper.imag() - lower.imag()) / (2.0 * std::numbers::pi);
        const double real = (upper.real() + lower.real()) / (2.0 * std::numbers::pi);
        if (std::abs(imag) > std::max(cfg.abs_tol, cfg.rel_tol * std::abs(real)) * 10.0) {
            throw NumericalError("foxh_contour: conjugate symmetry violated, imaginary part " + std::to_string(imag));
        }
        integral = real;
    }
    return {integral, phi0};
}

/// H[z] for real z > 0 by contour quadrature.
inline double foxh_contour(const FoxHParams& params, double z, const QuadratureConfig& cfg = {}) {
    detail::require(z > 0.0 && std::isfinite(z), "foxh_contour: z must be positive and finite");
    return foxh_contour_scaled(params, std::log(z), cfg).value();
}

/// Meijer G as the unit-weight Fox H.
inline double meijer_g(const FoxHParams& params, double z, const QuadratureConfig& cfg = {}) {
    detail::require(params.all_unit_weights(), "meijer_g: all coefficient weights must equal 1");
    return foxh_contour(params, z, cfg);
}

// ---------------------------------------------------------------------------
// Residue series for the ratio kernels
//
//   H1 = H^{1,1}_{1,1}[z | (1-μ2-kμ1, k); (0,1)]
//   H2 = H^{1,2}_{2,2}[z | (1-μ1,1), (1-kμ1-μ2, k); (0,1), (-μ1,1)]
//   H3 = H^{1,2}_{2,1}[z | (1-μ2-kμ1, k), (1-aμ1, a); (0,1)]
//
// Ascending branch: residues at the poles s = -h of Γ(s), a series in z^h.
// Descending branch: residues at the right poles, a series in z^{-s_h}.

inline FoxHParams h1_params(double mu1, double mu2, double k) {
    return FoxHParams(1, 1, {{1.0 - mu2 - k * mu1, k}}, {{0.0, 1.0}});
}

inline FoxHParams h2_params(double mu1, double mu2, double k) {
    return FoxHParams(1, 2, {{1.0 - mu1, 1.0}, {1.0 - k * mu1 - mu2, k}}, {{0.0, 1.0}, {-mu1, 1.0}});
}

inline FoxHParams h3_params(double mu1, double mu2, double k, double a) {
    return FoxHParams(1, 2, {{1.0 - mu2 - k * mu1, k}, {1.0 - a * mu1, a}}, {{0.0, 1.0}});
}

enum class SeriesBranch { Ascending, Descending };

struct SeriesResult {
    ScaledValue sum;
    int terms = 0;
    /// Σ|term| / |Σ term|; digits lost to cancellation ≈ log10(condition).
    double condition = 1.0;
    SeriesBranch branch = SeriesBranch::Ascending;

    double value() const { return sum.value(); }
};

namespace detail {

// Accumulates sign * exp(log_abs) relative to the first term's magnitude.
class SeriesAccumulator {
public:
    explicit SeriesAccumulator(const SeriesConfig& cfg) : cfg_(cfg) {}

    /// Returns true once enough consecutive terms were negligible.
    bool add(int sign, double log_abs) {
        ++terms_;
        if (sign == 0 || (std::isinf(log_abs) && log_abs < 0.0)) return note_small(true);
        if (!started_) {
            ref_ = log_abs;
            started_ = true;
        }
        const double mag = std::exp(log_abs - ref_);
        if (!std::isfinite(mag)) throw SeriesDivergence("residue series: term overflow");
        sum_.add(sign > 0 ? mag : -mag);
        l1_.add(mag);
        return note_small(mag <= cfg_.rel_tol * std::abs(sum_.value()));
    }

    int terms() const { return terms_; }
    bool exhausted() const { return terms_ >= cfg_.max_terms; }

    SeriesResult result(SeriesBranch branch) const {
        const double total = sum_.value();
        SeriesResult r;
        r.sum = {total, ref_};
        r.terms = terms_;
        r.condition = total == 0.0 ? std::numeric_limits<double>::infinity() : l1_.value() / std::abs(total);
        r.branch = branch;
        return r;
    }

private:
    bool note_small(bool small) {
        small_run_ = small ? small_run_ + 1 : 0;
        return small_run_ >= cfg_.consecutive_small_terms;
    }

    const SeriesConfig& cfg_;
    CompensatedSum sum_;
    CompensatedSum l1_;
    double ref_ = 0.0;
    bool started_ = false;
    int terms_ = 0;
    int small_run_ = 0;
};

inline int parity(long h) { return (h % 2 == 0) ? 1 : -1; }

inline SeriesBranch branch_by_delta(double delta, double log_z, double log_radius, const char* who) {
    constexpr double flat = 1e-12;
    if (delta > flat) return SeriesBranch::Ascending;
    if (delta < -flat) return SeriesBranch::Descending;
    if (log_z < log_radius) return SeriesBranch::Ascending;
    if (log_z > log_radius) return SeriesBranch::Descending;
    throw DomainError(std::string(who) + ": both series branches diverge on the boundary |z| = radius");
}

template <class Term>
SeriesResult run_series(const SeriesConfig& cfg, SeriesBranch branch, const char* who, Term&& term) {
    cfg.validate();
    SeriesAccumulator acc(cfg);
    for (long h = 0;; ++h) {
        if (acc.exhausted()) {
            throw SeriesDivergence(std::string(who) + ": no convergence within " + std::to_string(cfg.max_terms) +
                                   " terms");
        }
        if (term(h, acc)) break;
    }
    SeriesResult r = acc.result(branch);
    if (!(r.condition <= cfg.max_condition)) {
        throw SeriesDivergence(std::string(who) + ": cancellation, condition number " + std::to_string(r.condition));
    }
    return r;
}

}  // namespace detail

/// Branch the H1/H2 series take at (k, z): decided by Δ = 1 - k, and by |z|
/// against 1 when k = 1.
inline SeriesBranch h12_series_branch(double k, double log_z) {
    return detail::branch_by_delta(1.0 - k, log_z, 0.0, "h1/h2 series");
}

/// Branch for H3: Δ = 1 - k - a, boundary radius k^{-k} a^{-a}.
inline SeriesBranch h3_series_branch(double k, double a, double log_z) {
    return detail::branch_by_delta(1.0 - k - a, log_z, -k * std::log(k) - a * std::log(a), "h3 series");
}

inline SeriesResult h1_series(double mu1, double mu2, double k, double log_z, const SeriesConfig& cfg = {}) {
    detail::require_positive(mu1, "h1 series: mu1");
    detail::require_positive(mu2, "h1 series: mu2");
    detail::require_positive(k, "h1 series: k");
    const SeriesBranch branch = h12_series_branch(k, log_z);
    if (branch == SeriesBranch::Ascending) {
        return detail::run_series(cfg, branch, "h1 series", [&](long h, detail::SeriesAccumulator& acc) {
            const double lg = log_gamma(k * (h + mu1) + mu2) - log_gamma(h + 1.0);
            return acc.add(detail::parity(h), lg + h * log_z);
        });
    }
    return detail::run_series(cfg, branch, "h1 series", [&](long h, detail::SeriesAccumulator& acc) {
        const double s = mu1 + (mu2 + h) / k;
        const double lg = log_gamma(s) - log_gamma(h + 1.0) - std::log(k);
        return acc.add(detail::parity(h), lg - s * log_z);
    });
}

inline SeriesResult h2_series(double mu1, double mu2, double k, double log_z, const SeriesConfig& cfg = {}) {
    detail::require_positive(mu1, "h2 series: mu1");
    detail::require_positive(mu2, "h2 series: mu2");
    detail::require_positive(k, "h2 series: k");
    const SeriesBranch branch = h12_series_branch(k, log_z);
    if (branch == SeriesBranch::Ascending) {
        return detail::run_series(cfg, branch, "h2 series", [&](long h, detail::SeriesAccumulator& acc) {
            const double lg = log_gamma(k * (h + mu1) + mu2) - log_gamma(h + 1.0) - std::log(h + mu1);
            return acc.add(detail::parity(h), lg + h * log_z);
        });
    }
    // Γ(μ1 - s)/Γ(1 + μ1 - s) = 1/(μ1 - s): the first family has the single
    // pole s = μ1 (the Γ(1-h)^{-1} factor kills h >= 1), then the poles
    // s_h = μ1 + (μ2 + h)/k of Γ(kμ1 + μ2 - ks).
    return detail::run_series(cfg, branch, "h2 series", [&](long idx, detail::SeriesAccumulator& acc) {
        if (idx == 0) return acc.add(1, log_gamma(mu1) + log_gamma(mu2) - mu1 * log_z);
        const long h = idx - 1;
        const double s = mu1 + (mu2 + h) / k;
        const double lg = log_gamma(s) - log_gamma(h + 1.0) - std::log(mu2 + h);
        return acc.add(-detail::parity(h), lg - s * log_z);
    });
}

inline SeriesResult h3_series(double mu1, double mu2, double k, double a, double log_z, const SeriesConfig& cfg = {}) {
    detail::require_positive(mu1, "h3 series: mu1");
    detail::require_positive(mu2, "h3 series: mu2");
    detail::require_positive(k, "h3 series: k");
    detail::require_positive(a, "h3 series: a");
    const SeriesBranch branch = h3_series_branch(k, a, log_z);
    if (branch == SeriesBranch::Ascending) {
        return detail::run_series(cfg, branch, "h3 series", [&](long h, detail::SeriesAccumulator& acc) {
            const double lg = log_gamma(k * (h + mu1) + mu2) + log_gamma(a * (h + mu1)) - log_gamma(h + 1.0);
            return acc.add(detail::parity(h), lg + h * log_z);
        });
    }

    // Two right families, merged in increasing s:
    //   F1: s = μ1 + (μ2 + h)/k   poles of Γ(μ2 + kμ1 - ks)
    //   F2: s = μ1 + j/a          poles of Γ(a(μ1 - s))
    // Coinciding poles are double and pick up digamma terms.
    long h = 0;
    long j = 0;
    const double c = mu2 + k * mu1;
    return detail::run_series(cfg, branch, "h3 series", [&](long, detail::SeriesAccumulator& acc) {
        const double s1 = mu1 + (mu2 + h) / k;
        const double s2 = mu1 + j / a;
        if (std::abs(s1 - s2) <= 1e-10 * std::max(1.0, s1)) {
            const double s = 0.5 * (s1 + s2);
            const double bracket = (digamma(s) - log_z) / (k * a) - digamma(j + 1.0) / k - digamma(h + 1.0) / a;
            const int sign = -detail::parity(h + j) * (bracket < 0.0 ? -1 : 1);
            const double lg = log_gamma(s) - s * log_z - log_gamma(h + 1.0) - log_gamma(j + 1.0) +
                              (bracket == 0.0 ? -std::numeric_limits<double>::infinity() : std::log(std::abs(bracket)));
            ++h;
            ++j;
            return acc.add(bracket == 0.0 ? 0 : sign, lg);
        }
        if (s1 < s2) {
            const SignedLog g = log_gamma_signed(a * (mu1 - s1));
            const double lg = log_gamma(s1) + g.log_abs - s1 * log_z - log_gamma(h + 1.0) - std::log(k);
            const int sign = detail::parity(h) * g.sign;
            ++h;
            return acc.add(sign, lg);
        }
        const SignedLog g = log_gamma_signed(c - k * s2);
        const double lg = log_gamma(s2) + g.log_abs - s2 * log_z - log_gamma(j + 1.0) - std::log(a);
        const int sign = detail::parity(j) * g.sign;
        ++j;
        return acc.add(sign, lg);
    });
}

inline double foxh_series_h1(double mu1, double mu2, double k, double z, const SeriesConfig& cfg = {}) {
    detail::require(z > 0.0, "foxh_series_h1: z must be positive");
    return h1_series(mu1, mu2, k, std::log(z), cfg).value();
}

inline double foxh_series_h2(double mu1, double mu2, double k, double z, const SeriesConfig& cfg = {}) {
    detail::require(z > 0.0, "foxh_series_h2: z must be positive");
    return h2_series(mu1, mu2, k, std::log(z), cfg).value();
}

/// a = α1/2, the weight of the Γ(a(μ1 - s)) factor in the MGF kernel.
inline double foxh_series_h3(double mu1, double mu2, double k, double a, double z, const SeriesConfig& cfg = {}) {
    detail::require(z > 0.0, "foxh_series_h3: z must be positive");
    return h3_series(mu1, mu2, k, a, std::log(z), cfg).value();
}

}  // namespace alphamu
